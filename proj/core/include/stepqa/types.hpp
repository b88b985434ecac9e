#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stepqa/answer.hpp"
#include "stepqa/decimal.hpp"

namespace stepqa {

// ---------------------------------------------------------------------------
// Scale

enum class Scale { none, percent, thousand, million, billion };

// Exact multiplier of the scale variant: 1, 0.01, 10^3, 10^6, 10^9.
Rational scale_factor(Scale s);

// Canonical lowercase surface form.
std::string render_scale(Scale s);

// Case-insensitive match against the five canonical names; anything else is
// a distinct error (unknown strings never silently map to `none`).
Scale scale_parse(const std::string& s);               // throws UnknownScaleError
std::optional<Scale> try_scale_parse(const std::string& s);

// ---------------------------------------------------------------------------
// QuestionType

enum class QuestionType { span, multi_span, count, arithmetic };

// Snake-case id used in reports and JSON.
std::string to_string(QuestionType t);

// Surface form used in the five-step templates: "Single span",
// "Multiple spans", "Count", "Arithmetic".
std::string render_question_type(QuestionType t);

// Total over the alias table, case-insensitive; rejects everything else.
QuestionType question_type_parse(const std::string& s);  // throws UnknownQuestionTypeError
std::optional<QuestionType> try_question_type_parse(const std::string& s);

// Alias surfaces accepted by question_type_parse (lowercased).
const std::vector<std::pair<std::string, QuestionType>>& question_type_aliases();

// ---------------------------------------------------------------------------
// Table

// Rectangular 2D array of already-normalized cells (no unescaped '|', no
// newlines).
struct Table {
  std::vector<std::vector<std::string>> rows;

  size_t row_count() const { return rows.size(); }
  size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

  // Throws Error when the invariants are violated.
  void validate() const;
};

// ---------------------------------------------------------------------------
// QAInstance

enum class Dataset { finqa, tatqa, tatdqa };

std::string to_string(Dataset d);
std::optional<Dataset> dataset_from_string(const std::string& s);

struct QAInstance {
  std::string id;
  Dataset dataset = Dataset::finqa;
  std::optional<Table> table;
  std::vector<std::string> texts;  // paragraphs (finqa/tatqa) or page contents (tatdqa)
  std::string question;
  AnswerValue gold_answer = AnswerValue::text("");
  std::optional<std::string> gold_derivation;  // derivation (tatqa/tatdqa) or program (finqa)
  std::optional<QuestionType> gold_question_type;
  std::optional<Scale> gold_scale;

  // Fail-fast structural check applied by the loaders.
  void validate() const;  // throws SchemaError
};

// ---------------------------------------------------------------------------
// StepTrace

enum class TraceSchema { three_step, five_step };

size_t step_count(TraceSchema s);

// Ordered step-index -> output map. Outputs are stored in cell form (pipes
// escaped, no newlines), exactly as they appear in a rendered response row.
struct StepTrace {
  TraceSchema schema = TraceSchema::three_step;
  std::map<int, std::string> steps;  // 1-based, contiguous

  const std::string& at(int index) const;

  // Throws Error when indices are not exactly 1..N for the schema or an
  // output contains an unescaped pipe or newline.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Prediction

// A parsed model response. Field strings are carried verbatim from the step
// table (cell form); spans are unescaped only when they become AnswerValues.
struct Prediction {
  std::optional<QuestionType> question_type;
  std::string evidence;    // O1
  std::string equation;    // O2
  std::string raw_answer;  // O3
  std::optional<Scale> scale;
  AnswerValue final_answer = AnswerValue::text("");
};

}  // namespace stepqa
