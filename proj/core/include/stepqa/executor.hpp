#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stepqa/answer.hpp"
#include "stepqa/types.hpp"

namespace stepqa {

enum class ExecBranch { model_passthrough, arithmetic, count, comparison, span, multi_span };

std::string to_string(ExecBranch b);

struct FinalAnswer {
  AnswerValue value = AnswerValue::text("");
  ExecBranch branch = ExecBranch::model_passthrough;
  std::vector<std::string> flags;  // diagnostics, e.g. "division_by_zero"
};

// Refines the model's final answer from its intermediate step outputs:
//   answer <- o3
//   if o2 is a valid arithmetic equation: answer <- round(eval(o2), 4)
//   elif '#' in o2:                       answer <- number of '#'-split items
//   elif '>' or '<' in o2:                answer <- eval(o2) as yes/no
//   elif o2 == "N.A.":  qt Span           answer <- o1
//                       qt Multiple Spans answer <- o1 split on '#'
// A runtime evaluation failure inside a fired branch (division by zero, or a
// '>'/'<' string that is not a parseable comparison) falls back to the
// model's own o3 with a flag instead of aborting the record.
//
// Never throws on content; pure.
FinalAnswer execute(const std::string& o1, const std::string& o2, const std::string& o3,
                    std::optional<QuestionType> question_type);

// Convenience overload over a parsed prediction.
FinalAnswer execute(const Prediction& prediction);

}  // namespace stepqa
