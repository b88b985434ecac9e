#include <doctest.h>

#include "stepqa/dataset.hpp"
#include "stepqa/errors.hpp"

using namespace stepqa;

namespace {
const std::string kData = STEPQA_TEST_DATA_DIR;
}

TEST_CASE("finqa loader") {
  const auto instances = load_finqa(kData + "/finqa_sample.json");
  REQUIRE(instances.size() == 10);
  CHECK(stats(Dataset::finqa, "train", instances).count == 10);

  const QAInstance& first = instances[0];
  CHECK(first.id == "syn-finqa-1");
  CHECK(first.dataset == Dataset::finqa);
  REQUIRE(first.table);
  CHECK(first.table->rows[1][2] == "201");
  CHECK(first.texts.size() == 2);  // pre_text then post_text
  CHECK(first.gold_derivation == "subtract(201, 125), divide(#0, 125)");
  CHECK(first.gold_answer == AnswerValue::number(Rational(608, 1000)));
  CHECK_FALSE(first.gold_scale);

  // yes/no execution answers become booleans
  CHECK(instances[2].gold_answer == AnswerValue::boolean(true));
}

TEST_CASE("tatqa loader") {
  const auto instances = load_tatqa(kData + "/tatqa_sample.json");
  REQUIRE(instances.size() == 10);

  const QAInstance& q1 = instances[0];
  CHECK(q1.id == "syn-tatqa-q1");
  CHECK(q1.dataset == Dataset::tatqa);
  REQUIRE(q1.table);
  CHECK(q1.table->rows[1][1] == "2,616");
  CHECK(q1.gold_question_type == QuestionType::arithmetic);
  CHECK(q1.gold_scale == Scale::thousand);
  CHECK(q1.gold_answer == AnswerValue::number(Rational(138)));

  // "" scale maps to none; span answers stay spans
  const QAInstance& q4 = instances[3];
  CHECK(q4.gold_scale == Scale::none);
  CHECK(q4.gold_question_type == QuestionType::span);
  CHECK(q4.gold_answer == AnswerValue::spans({"2019"}));

  // numeric answers provided as strings are parsed
  const QAInstance& q8 = instances[7];
  CHECK(q8.gold_answer == AnswerValue::number(Rational(51, 10)));
}

TEST_CASE("tatdqa loader") {
  const auto instances = load_tatdqa(kData + "/tatdqa_sample.json");
  REQUIRE(instances.size() == 10);
  for (const auto& inst : instances) {
    CHECK_FALSE(inst.table);  // no structured table
    CHECK(inst.dataset == Dataset::tatdqa);
    CHECK(inst.gold_scale.has_value());
  }
  CHECK(instances[0].texts.size() == 2);  // both pages, in page order
  CHECK(instances[0].texts[0].find("page one") != std::string::npos);
  CHECK(instances[7].texts.size() == 3);
}

TEST_CASE("loading is deterministic") {
  const auto a = load_tatqa(kData + "/tatqa_sample.json");
  const auto b = load_tatqa(kData + "/tatqa_sample.json");
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].question == b[i].question);
    CHECK(a[i].gold_answer == b[i].gold_answer);
  }
}

TEST_CASE("empty array loads to an empty list") {
  CHECK(load_finqa_json("[]").empty());
  CHECK(load_tatqa_json("[]").empty());
  CHECK(load_tatdqa_json("[]").empty());
}

TEST_CASE("schema violations name the record and field") {
  const std::string missing_scale = R"([
    {
      "table": {"uid": "t", "table": [["a"], ["b"]]},
      "paragraphs": [{"uid": "p", "order": 1, "text": "x"}],
      "questions": [{
        "uid": "q-noscale", "order": 1, "question": "?",
        "answer": 1, "derivation": "", "answer_type": "count"
      }]
    }
  ])";
  try {
    load_tatqa_json(missing_scale);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.field() == "scale");
    CHECK(e.record_id() == "q-noscale");
  }

  CHECK_THROWS_AS(load_finqa_json("{}"), IoError);          // not an array
  CHECK_THROWS_AS(load_finqa_json("not json"), IoError);    // malformed
  CHECK_THROWS_AS(load_finqa("/nonexistent/path.json"), IoError);

  const std::string no_program = R"([
    {"id": "r1", "pre_text": [], "post_text": [], "table": [["a"]],
     "qa": {"question": "?", "exe_ans": 1}}
  ])";
  try {
    load_finqa_json(no_program);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.field() == "program");
    CHECK(e.record_id() == "r1");
  }
}

TEST_CASE("cells are normalized at ingest") {
  const std::string raw = R"json([
    {"id": "r1", "pre_text": [], "post_text": [],
     "table": [["a|b", "x\ny"]],
     "qa": {"question": "?", "program": "add(1, 2)", "exe_ans": 3}}
  ])json";
  const auto instances = load_finqa_json(raw);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].table->rows[0][0] == "a\\|b");
  CHECK(instances[0].table->rows[0][1] == "x y");
}
