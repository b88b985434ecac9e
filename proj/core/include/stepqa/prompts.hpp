#pragma once

#include "stepqa/templates.hpp"
#include "stepqa/types.hpp"

namespace stepqa {

// Step-wise fine-tuning prompt: finqa -> three-step, tatqa/tatdqa ->
// five-step. Throws MissingTableError when a finqa/tatqa instance lacks a
// table.
PromptText build_stepwise_prompt(const QAInstance& inst);

// End-to-end fine-tuning prompt (no step enumeration).
PromptText build_e2e_prompt(const QAInstance& inst);

// Zero-shot baseline prompt; `cot` includes the chain-of-thought sentence.
PromptText build_zero_shot_prompt(const QAInstance& inst, bool cot);

// The {text}/{pages} slot: paragraphs or page contents joined with newlines.
std::string joined_texts(const QAInstance& inst);

}  // namespace stepqa
