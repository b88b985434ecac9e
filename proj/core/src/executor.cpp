#include "stepqa/executor.hpp"

#include <algorithm>

#include "stepqa/equation.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

std::string to_string(ExecBranch b) {
  switch (b) {
    case ExecBranch::model_passthrough: return "model_passthrough";
    case ExecBranch::arithmetic: return "arithmetic";
    case ExecBranch::count: return "count";
    case ExecBranch::comparison: return "comparison";
    case ExecBranch::span: return "span";
    case ExecBranch::multi_span: return "multi_span";
  }
  return "model_passthrough";
}

FinalAnswer execute(const std::string& o1, const std::string& o2, const std::string& o3,
                    std::optional<QuestionType> question_type) {
  FinalAnswer result;
  result.value = AnswerValue::text(trim(o3));
  result.branch = ExecBranch::model_passthrough;

  if (validate_equation(o2)) {
    auto v = eval_arithmetic(o2);
    if (std::holds_alternative<Rational>(v)) {
      result.value = AnswerValue::number(round_half_even(std::get<Rational>(v), 4));
      result.branch = ExecBranch::arithmetic;
    } else {
      result.flags.push_back("division_by_zero");  // keep o3
    }
    return result;
  }

  // The containment checks run on the raw o2 string, before any trimming.
  if (o2.find('#') != std::string::npos) {
    const size_t hashes = static_cast<size_t>(std::count(o2.begin(), o2.end(), '#'));
    result.value = AnswerValue::number(Rational(static_cast<unsigned>(hashes) + 1));
    result.branch = ExecBranch::count;
    return result;
  }

  if (o2.find('>') != std::string::npos || o2.find('<') != std::string::npos) {
    auto v = eval_comparison(o2);
    if (std::holds_alternative<bool>(v)) {
      result.value = AnswerValue::boolean(std::get<bool>(v));
      result.branch = ExecBranch::comparison;
    } else {
      result.flags.push_back(std::get<EvalError>(v).kind == EvalErrorKind::division_by_zero
                                 ? "division_by_zero"
                                 : "comparison_parse_failed");
    }
    return result;
  }

  if (o2 == "N.A.") {
    if (question_type == QuestionType::span) {
      result.value = AnswerValue::text(unescape_cell(trim(o1)));
      result.branch = ExecBranch::span;
    } else if (question_type == QuestionType::multi_span) {
      std::vector<std::string> spans;
      for (const auto& item : split_hash_items(o1)) spans.push_back(unescape_cell(item));
      result.value = AnswerValue::spans(std::move(spans));
      result.branch = ExecBranch::multi_span;
    }
    // other/absent question types keep o3
    return result;
  }

  return result;
}

FinalAnswer execute(const Prediction& prediction) {
  return execute(prediction.evidence, prediction.equation, prediction.raw_answer,
                 prediction.question_type);
}

}  // namespace stepqa
