#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stepqa/answer.hpp"
#include "stepqa/types.hpp"

namespace stepqa {

enum class ScaleMode { strict, ignore };

std::string to_string(ScaleMode m);
std::optional<ScaleMode> scale_mode_from_string(const std::string& s);

// Pinned normalization (the frozen rule set for both metrics):
//  - one surface span per answer part (numbers render canonically, booleans
//    as yes/no);
//  - per span: lowercase, split on whitespace; a token that parses as a
//    number (after dropping a leading '$', thousands commas, and a trailing
//    '%', which is stripped without rescaling) becomes its canonical
//    4-decimal form; otherwise edge punctuation is trimmed and, failing
//    that, all punctuation removed; empty tokens and the articles a/an/the
//    are dropped.
struct NormalizedAnswer {
  std::vector<std::string> span_strings;               // tokens re-joined per span
  std::vector<std::map<std::string, int>> span_bags;   // token multiset per span
  std::optional<Rational> number;  // canonical number when the whole answer is one number
};

NormalizedAnswer normalize_answer(const AnswerValue& a);

// 1 iff the normalized answers are identical (bag semantics over spans) and,
// in strict mode, the scales are equal (absent counts as `none`).
int exact_match(const AnswerValue& pred, std::optional<Scale> pred_scale,
                const AnswerValue& gold, std::optional<Scale> gold_scale, ScaleMode mode);

// Token-bag F1 with greedy one-to-one span alignment (pairs taken in
// descending pairwise F1). A pair scores 0 when the gold span is numeric and
// the predicted number is not exactly equal.
double numeracy_f1(const AnswerValue& pred, const AnswerValue& gold);

// Best score over gold alternatives, for datasets that provide several.
double numeracy_f1(const AnswerValue& pred, const std::vector<AnswerValue>& golds);

struct EvalRecord {
  std::string id;
  AnswerValue pred = AnswerValue::text("");
  std::optional<Scale> pred_scale;
  AnswerValue gold = AnswerValue::text("");
  std::optional<Scale> gold_scale;
  std::optional<QuestionType> gold_type;
};

struct TypeStats {
  double em = 0.0;
  double f1 = 0.0;
  size_t count = 0;
};

struct EvalReport {
  size_t n = 0;
  double em = 0.0;
  double f1 = 0.0;
  ScaleMode scale_mode = ScaleMode::strict;
  std::map<std::string, TypeStats> per_type;  // question-type id or "untyped"
};

EvalReport evaluate_split(const std::vector<EvalRecord>& records, ScaleMode mode);

}  // namespace stepqa
