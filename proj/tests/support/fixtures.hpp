// Fixed sample instances shared by the template-fidelity tests and the
// hand-scored metric fixtures.
#pragma once

#include <string>
#include <vector>

#include "stepqa/metrics.hpp"
#include "stepqa/types.hpp"

namespace fixtures {

inline stepqa::QAInstance finqa_sample() {
  stepqa::QAInstance inst;
  inst.id = "finqa-sample-1";
  inst.dataset = stepqa::Dataset::finqa;
  inst.table = stepqa::Table{{{"Year", "Cash Flow"}, {"2010", "125"}, {"2011", "201"}}};
  inst.texts = {"Cash flow improved in 2011.", "All amounts are in millions."};
  inst.question = "what was the percent change in cash flow from 2010 to 2011?";
  inst.gold_answer = stepqa::AnswerValue::number(stepqa::Rational(608, 1000));
  inst.gold_derivation = "subtract(201, 125), divide(#0, 125)";
  return inst;
}

inline stepqa::QAInstance tatqa_sample() {
  stepqa::QAInstance inst;
  inst.id = "tatqa-sample-1";
  inst.dataset = stepqa::Dataset::tatqa;
  inst.table = stepqa::Table{{{"Year", "Revenue"}, {"2019", "2,616"}, {"2018", "2,478"}}};
  inst.texts = {"Revenue is reported in thousands."};
  inst.question = "What was the change in revenue between 2018 and 2019?";
  inst.gold_answer = stepqa::AnswerValue::number(stepqa::Rational(138));
  inst.gold_derivation = "2,616 - 2,478";
  inst.gold_question_type = stepqa::QuestionType::arithmetic;
  inst.gold_scale = stepqa::Scale::thousand;
  return inst;
}

inline stepqa::QAInstance tatdqa_sample() {
  stepqa::QAInstance inst;
  inst.id = "tatdqa-sample-1";
  inst.dataset = stepqa::Dataset::tatdqa;
  inst.texts = {"First page text about operations.",
                "Second page text with financial details."};
  inst.question = "What was the total equity at year end?";
  inst.gold_answer = stepqa::AnswerValue::number(stepqa::Rational(4200));
  inst.gold_derivation = "";
  inst.gold_question_type = stepqa::QuestionType::span;
  inst.gold_scale = stepqa::Scale::million;
  return inst;
}

// ---------------------------------------------------------------------------
// Twenty hand-scored metric fixtures. Expected values computed by hand before
// the metrics were implemented; em/f1 frozen here.

struct MetricCase {
  const char* name;
  stepqa::EvalRecord record;
  int em_strict;
  int em_ignore;
  double f1;
};

inline std::vector<MetricCase> metric_cases() {
  using stepqa::AnswerValue;
  using stepqa::EvalRecord;
  using stepqa::QuestionType;
  using stepqa::Rational;
  using stepqa::Scale;

  auto num = [](const char* s) {
    return AnswerValue::number(stepqa::parse_decimal(s)->value);
  };
  std::vector<MetricCase> cases;
  auto add = [&cases](const char* name, AnswerValue pred, std::optional<Scale> ps,
                      AnswerValue gold, std::optional<Scale> gs,
                      std::optional<QuestionType> qt, int ems, int emi, double f1) {
    EvalRecord r;
    r.id = name;
    r.pred = std::move(pred);
    r.pred_scale = ps;
    r.gold = std::move(gold);
    r.gold_scale = gs;
    r.gold_type = qt;
    cases.push_back(MetricCase{name, std::move(r), ems, emi, f1});
  };

  add("number exact, same scale", num("892.3"), Scale::million, num("892.3"), Scale::million,
      QuestionType::arithmetic, 1, 1, 1.0);
  add("number exact, wrong scale", num("892.3"), Scale::thousand, num("892.3"), Scale::million,
      QuestionType::arithmetic, 0, 1, 1.0);
  add("number near miss", num("0.61"), Scale::none, num("0.608"), Scale::none,
      QuestionType::arithmetic, 0, 0, 0.0);
  add("article and case stripping", AnswerValue::text("The Net Revenue"), Scale::none,
      AnswerValue::text("net revenue"), Scale::none, QuestionType::span, 1, 1, 1.0);
  add("partial token overlap", AnswerValue::text("net revenue"), Scale::none,
      AnswerValue::text("total net revenue"), Scale::none, QuestionType::span, 0, 0, 0.8);
  add("span order ignored", AnswerValue::spans({"cash", "debt"}), Scale::none,
      AnswerValue::spans({"debt", "cash"}), Scale::none, QuestionType::multi_span, 1, 1, 1.0);
  add("missing second span", AnswerValue::spans({"alpha"}), Scale::none,
      AnswerValue::spans({"alpha", "beta"}), Scale::none, QuestionType::multi_span, 0, 0, 0.5);
  add("count exact", num("3"), Scale::none, num("3"), Scale::none, QuestionType::count, 1, 1,
      1.0);
  add("count off by one", num("2"), Scale::none, num("3"), Scale::none, QuestionType::count, 0,
      0, 0.0);
  add("boolean match", AnswerValue::boolean(true), std::nullopt, AnswerValue::boolean(true),
      std::nullopt, std::nullopt, 1, 1, 1.0);
  add("boolean mismatch", AnswerValue::boolean(false), std::nullopt, AnswerValue::boolean(true),
      std::nullopt, std::nullopt, 0, 0, 0.0);
  add("percent sign stripped", AnswerValue::text("5.57%"), Scale::percent, num("5.57"),
      Scale::percent, QuestionType::arithmetic, 1, 1, 1.0);
  add("thousands comma stripped", AnswerValue::text("1,000"), Scale::thousand, num("1000"),
      Scale::thousand, QuestionType::arithmetic, 1, 1, 1.0);
  add("trailing zeros canonicalized", AnswerValue::text("0.6080"), Scale::none, num("0.608"),
      Scale::none, QuestionType::arithmetic, 1, 1, 1.0);
  add("year as text", AnswerValue::text("2015"), Scale::none, AnswerValue::text("2015"),
      Scale::none, QuestionType::span, 1, 1, 1.0);
  add("currency sign stripped", AnswerValue::text("$42"), std::nullopt, num("42"), std::nullopt,
      std::nullopt, 1, 1, 1.0);
  add("one span of two wrong", AnswerValue::spans({"net income", "tax"}), Scale::none,
      AnswerValue::spans({"net income", "taxes"}), Scale::none, QuestionType::multi_span, 0, 0,
      0.5);
  add("empty prediction", AnswerValue::text(""), Scale::none, AnswerValue::text("2015"),
      Scale::none, QuestionType::span, 0, 0, 0.0);
  add("negative number", num("-14"), Scale::none, num("-14"), Scale::none,
      QuestionType::arithmetic, 1, 1, 1.0);
  add("sentence around numeric gold", AnswerValue::text("increased by 4.7 million"),
      Scale::none, num("4.7"), Scale::million, QuestionType::arithmetic, 0, 0, 0.0);

  return cases;
}

// Hand-computed aggregates over the twenty cases.
constexpr double kMetricEmStrict = 11.0 / 20.0;  // 0.55
constexpr double kMetricEmIgnore = 12.0 / 20.0;  // 0.60
constexpr double kMetricF1 = 13.8 / 20.0;        // 0.69

}  // namespace fixtures
