#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stepqa/types.hpp"

namespace stepqa {

enum class TableParseError { none, no_table_found, schema_mismatch };

struct StepTableResult {
  std::optional<StepTrace> trace;
  TableParseError error = TableParseError::none;
  std::string offending;  // the text span that failed, for diagnostics
};

// Finds the last markdown table whose first column is consecutive integers
// starting at 1 (an earlier table is used when only it matches the schema's
// step count). Header and separator rows are tolerated. Outputs are kept in
// cell form. Never throws on arbitrary input.
StepTableResult parse_step_table(std::string_view text, TraceSchema schema);

struct FinalStatement {
  std::string answer;                // trimmed text after "The answer is:"
  std::optional<std::string> scale;  // trimmed text after the scale marker
};

// Captures the last "The answer is:" statement; the five-step scale marker
// "#### and its corresponding scale is:" splits answer from scale. Returns
// nullopt when no statement exists.
std::optional<FinalStatement> parse_final_statement(std::string_view text, TraceSchema schema);

struct PredictionResult {
  std::optional<Prediction> prediction;  // nullopt only when both parses fail
  std::optional<StepTrace> trace;
  std::vector<std::string> flags;
};

// Composes the two parsers into a Prediction. When the table parse fails but
// a final statement exists, returns a degraded Prediction (empty evidence and
// equation, answer taken from the statement) with a flag set.
PredictionResult parse_prediction(std::string_view text, TraceSchema schema);

// Renders the training-template response layout: header row, one row per
// step, then the final statement (with scale marker for five-step traces).
std::string render_response(const StepTrace& trace, const AnswerValue& final_answer,
                            std::optional<Scale> scale);

}  // namespace stepqa
