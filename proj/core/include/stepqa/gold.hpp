#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stepqa/templates.hpp"
#include "stepqa/types.hpp"

namespace stepqa {

enum class PipelineKind { stepwise, e2e };

std::optional<PipelineKind> pipeline_from_string(const std::string& s);
std::string to_string(PipelineKind k);

struct TrainingInstance {
  std::string id;
  PromptText prompt;
  std::string gold_response;
  std::optional<StepTrace> trace;  // present for the step-wise pipeline
};

struct GoldResult {
  std::optional<TrainingInstance> instance;
  std::string failure;  // non-empty reason when the instance is not emitted
};

// Synthesizes the gold response for an instance. For the step-wise pipeline
// the gold trace is executed through the external executor and compared with
// the annotated answer at 4 decimals; inconsistent instances are reported in
// `failure` instead of being emitted.
GoldResult build_gold_response(const QAInstance& inst, PipelineKind kind);

// Numeric literals of a derivation in order of appearance, consecutive
// repeats dropped; a trailing '%' is removed from each literal.
std::vector<std::string> extract_numeric_evidence(const std::string& derivation);

// Splits a counting derivation on "##" into trimmed non-empty items.
std::vector<std::string> split_count_items(const std::string& derivation);

}  // namespace stepqa
