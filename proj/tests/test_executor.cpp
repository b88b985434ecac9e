#include <doctest.h>

#include <random>

#include "stepqa/equation.hpp"
#include "stepqa/executor.hpp"
#include "support/oracles.hpp"

using namespace stepqa;

TEST_CASE("the five worked branch examples") {
  // arithmetic: the equation overrides the model's own answer
  auto a = execute("201 # 125", "(201 - 125) / 125", "0.61", QuestionType::arithmetic);
  CHECK(a.branch == ExecBranch::arithmetic);
  CHECK(a.value == AnswerValue::number(Rational(608, 1000)));

  // count: number of '#'-separated items
  auto c = execute("439000 # 411636 # 556000", "439000 # 411636 # 556000", "2",
                   QuestionType::count);
  CHECK(c.branch == ExecBranch::count);
  CHECK(c.value == AnswerValue::number(Rational(3)));

  // span: evidence passes through
  auto s = execute("2015", "N.A.", "garbled", QuestionType::span);
  CHECK(s.branch == ExecBranch::span);
  CHECK(s.value == AnswerValue::text("2015"));

  // multiple spans: evidence split on '#'
  auto m = execute("A # B", "N.A.", "A", QuestionType::multi_span);
  CHECK(m.branch == ExecBranch::multi_span);
  CHECK(m.value == AnswerValue::spans({"A", "B"}));

  // nothing matches: the o3 initialization survives
  auto p = execute("x", "hello world", "42", std::nullopt);
  CHECK(p.branch == ExecBranch::model_passthrough);
  CHECK(p.value == AnswerValue::text("42"));
}

TEST_CASE("comparison branch renders yes/no") {
  auto yes = execute("", "153.7 > 139.9", "x", std::nullopt);
  CHECK(yes.branch == ExecBranch::comparison);
  CHECK(yes.value == AnswerValue::boolean(true));
  CHECK(yes.value.render() == "yes");

  auto no = execute("", "1 < 1", "x", std::nullopt);
  CHECK(no.branch == ExecBranch::comparison);
  CHECK(no.value.render() == "no");
}

TEST_CASE("branch order follows the algorithm") {
  // '#' check runs before the comparison check
  auto hash_first = execute("", "a > b # c", "o3", std::nullopt);
  CHECK(hash_first.branch == ExecBranch::count);
  CHECK(hash_first.value == AnswerValue::number(Rational(2)));

  // a bare numeric literal is a valid equation and overrides o3
  auto bare = execute("", "892.3", "junk", std::nullopt);
  CHECK(bare.branch == ExecBranch::arithmetic);
  CHECK(bare.value == AnswerValue::number(Rational(8923, 10)));

  // "N.A." with an unexpected question type keeps o3
  auto keep = execute("evidence", "N.A.", "kept", QuestionType::arithmetic);
  CHECK(keep.branch == ExecBranch::model_passthrough);
  CHECK(keep.value == AnswerValue::text("kept"));

  auto keep2 = execute("evidence", "N.A.", "kept", std::nullopt);
  CHECK(keep2.branch == ExecBranch::model_passthrough);
}

TEST_CASE("runtime failures fall back to the model answer with a flag") {
  auto div0 = execute("", "1 / 0", "fallback", std::nullopt);
  CHECK(div0.branch == ExecBranch::model_passthrough);
  CHECK(div0.value == AnswerValue::text("fallback"));
  REQUIRE(div0.flags.size() == 1);
  CHECK(div0.flags[0] == "division_by_zero");

  auto badcmp = execute("", "abc > def", "fallback", std::nullopt);
  CHECK(badcmp.branch == ExecBranch::model_passthrough);
  REQUIRE(badcmp.flags.size() == 1);
  CHECK(badcmp.flags[0] == "comparison_parse_failed");
}

TEST_CASE("count follows raw '#' splitting semantics") {
  CHECK(execute("", "a#b", "x", std::nullopt).value == AnswerValue::number(Rational(2)));
  CHECK(execute("", "a##b", "x", std::nullopt).value == AnswerValue::number(Rational(3)));
  CHECK(execute("", "#", "x", std::nullopt).value == AnswerValue::number(Rational(2)));
}

TEST_CASE("executor is pure and o3-independent outside passthrough") {
  std::mt19937_64 rng(777);
  int non_passthrough = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string o1 = oracle::random_cell(rng);
    std::string o2;
    switch (rng() % 6) {
      case 0: {
        auto node = oracle::random_expr(rng, 3);
        o2 = oracle::render_node(*node, rng);
        break;
      }
      case 1: o2 = "a # b # c"; break;
      case 2: o2 = "5 > 3"; break;
      case 3: o2 = "N.A."; break;
      case 4: o2 = oracle::random_bytes(rng, 40); break;
      case 5: o2 = "1 / 0"; break;
    }
    const std::string o3 = oracle::random_cell(rng);
    std::optional<QuestionType> qt;
    switch (rng() % 5) {
      case 0: qt = QuestionType::span; break;
      case 1: qt = QuestionType::multi_span; break;
      case 2: qt = QuestionType::count; break;
      case 3: qt = QuestionType::arithmetic; break;
      default: break;
    }

    const FinalAnswer first = execute(o1, o2, o3, qt);
    const FinalAnswer again = execute(o1, o2, o3, qt);
    CHECK(first.value == again.value);       // pure
    CHECK(first.branch == again.branch);

    if (first.branch == ExecBranch::arithmetic) CHECK(validate_equation(o2));
    if (first.branch == ExecBranch::count) CHECK(o2.find('#') != std::string::npos);

    if (first.branch != ExecBranch::model_passthrough) {
      ++non_passthrough;
      const FinalAnswer mutated = execute(o1, o2, o3 + " XYZ", qt);
      CHECK(mutated.value == first.value);   // o3-independent
      CHECK(mutated.branch == first.branch);
    }
  }
  CHECK(non_passthrough > 300);  // the generator exercises real branches
}
