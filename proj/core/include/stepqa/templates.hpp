#pragma once

#include <string>

#include "stepqa/types.hpp"

namespace stepqa {

enum class PromptSchema { three_step, five_step, e2e };

std::string to_string(PromptSchema s);

// A rendered prompt: the parts appear in order Instruction, Table (when the
// dataset has one), Text, Question, and the trailing Response header.
struct PromptText {
  std::string text;
  PromptSchema schema = PromptSchema::three_step;
  Dataset dataset = Dataset::finqa;
};

namespace templates {

// Fine-tuning prompts (step-wise pipeline). finqa uses the three-step
// instruction; tatqa/tatdqa use the five-step instruction with question-type
// and scale predictor steps. `content` is the rendered markdown table's
// companion text (finqa/tatqa) or the page contents (tatdqa).
std::string stepwise_prompt(Dataset d, const std::string& table_md, const std::string& text,
                            const std::string& question);

// Fine-tuning prompts (end-to-end pipeline): the instruction asks only for
// the final statement, no step enumeration.
std::string e2e_prompt(Dataset d, const std::string& table_md, const std::string& text,
                       const std::string& question);

// Zero-shot baseline prompts; `cot` inserts the chain-of-thought sentence.
std::string zero_shot_prompt(Dataset d, bool cot, const std::string& table_md,
                             const std::string& text, const std::string& question);

// Final-statement lines used in gold responses.
std::string final_statement(const std::string& answer);
std::string final_statement_with_scale(const std::string& answer, const std::string& scale);

}  // namespace templates

}  // namespace stepqa
