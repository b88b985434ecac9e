#pragma once

#include <optional>
#include <string>

#include "stepqa/types.hpp"

namespace stepqa {

enum class ErrorStep { extractor, reasoner };
enum class ErrorKind {
  wrong_evidence,
  missed_evidence,
  redundant_evidence,
  wrong_operators,
  wrong_values
};

std::string to_string(ErrorStep s);
std::string to_string(ErrorKind k);
ErrorStep step_of(ErrorKind k);

struct ErrorCategory {
  ErrorStep step = ErrorStep::extractor;
  ErrorKind kind = ErrorKind::wrong_evidence;
};

// Classifies an incorrect prediction against its gold trace. Evidence sets
// are compared first: a strict subset of the gold items is missed evidence, a
// strict superset redundant evidence, anything else wrong evidence. With
// matching evidence the equations are compared: same operator skeleton with
// different operands is wrong values; different skeleton over the same
// operand set is wrong operators. Returns nullopt when neither comparison is
// decisive (unclassifiable).
std::optional<ErrorCategory> categorize_error(const Prediction& pred, const StepTrace& gold_trace);

}  // namespace stepqa
