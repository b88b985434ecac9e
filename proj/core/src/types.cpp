#include "stepqa/types.hpp"

#include "stepqa/errors.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

Rational scale_factor(Scale s) {
  switch (s) {
    case Scale::none: return Rational(1);
    case Scale::percent: return Rational(1, 100);
    case Scale::thousand: return Rational(1000);
    case Scale::million: return Rational(1000000);
    case Scale::billion: return Rational(1000000000);
  }
  return Rational(1);
}

std::string render_scale(Scale s) {
  switch (s) {
    case Scale::none: return "none";
    case Scale::percent: return "percent";
    case Scale::thousand: return "thousand";
    case Scale::million: return "million";
    case Scale::billion: return "billion";
  }
  return "none";
}

std::optional<Scale> try_scale_parse(const std::string& s) {
  const std::string k = to_lower(trim(s));
  if (k == "none") return Scale::none;
  if (k == "percent") return Scale::percent;
  if (k == "thousand") return Scale::thousand;
  if (k == "million") return Scale::million;
  if (k == "billion") return Scale::billion;
  return std::nullopt;
}

Scale scale_parse(const std::string& s) {
  if (auto v = try_scale_parse(s)) return *v;
  throw UnknownScaleError(s);
}

std::string to_string(QuestionType t) {
  switch (t) {
    case QuestionType::span: return "span";
    case QuestionType::multi_span: return "multi_span";
    case QuestionType::count: return "count";
    case QuestionType::arithmetic: return "arithmetic";
  }
  return "span";
}

std::string render_question_type(QuestionType t) {
  switch (t) {
    case QuestionType::span: return "Single span";
    case QuestionType::multi_span: return "Multiple spans";
    case QuestionType::count: return "Count";
    case QuestionType::arithmetic: return "Arithmetic";
  }
  return "Single span";
}

const std::vector<std::pair<std::string, QuestionType>>& question_type_aliases() {
  // Alias table is data: surfaces seen across the templates, the algorithm
  // inputs, and the dataset releases, all lowercased.
  static const std::vector<std::pair<std::string, QuestionType>> table = {
      {"span", QuestionType::span},
      {"single span", QuestionType::span},
      {"multiple spans", QuestionType::multi_span},
      {"multi-span", QuestionType::multi_span},
      {"count", QuestionType::count},
      {"counting", QuestionType::count},
      {"arithmetic", QuestionType::arithmetic},
  };
  return table;
}

std::optional<QuestionType> try_question_type_parse(const std::string& s) {
  const std::string k = to_lower(trim(s));
  for (const auto& [alias, type] : question_type_aliases()) {
    if (k == alias) return type;
  }
  return std::nullopt;
}

QuestionType question_type_parse(const std::string& s) {
  if (auto v = try_question_type_parse(s)) return *v;
  throw UnknownQuestionTypeError(s);
}

void Table::validate() const {
  if (rows.empty()) throw Error("table has no rows");
  const size_t width = rows[0].size();
  if (width == 0) throw Error("table has empty rows");
  for (const auto& row : rows) {
    if (row.size() != width) throw Error("table is not rectangular");
    for (const auto& cell : row) {
      if (has_unescaped_pipe(cell)) throw Error("table cell contains unescaped '|': " + cell);
      if (cell.find('\n') != std::string::npos || cell.find('\r') != std::string::npos)
        throw Error("table cell contains a newline");
    }
  }
}

std::string to_string(Dataset d) {
  switch (d) {
    case Dataset::finqa: return "finqa";
    case Dataset::tatqa: return "tatqa";
    case Dataset::tatdqa: return "tatdqa";
  }
  return "finqa";
}

std::optional<Dataset> dataset_from_string(const std::string& s) {
  const std::string k = to_lower(trim(s));
  if (k == "finqa") return Dataset::finqa;
  if (k == "tatqa" || k == "tat-qa") return Dataset::tatqa;
  if (k == "tatdqa" || k == "tat-dqa") return Dataset::tatdqa;
  return std::nullopt;
}

void QAInstance::validate() const {
  if (id.empty()) throw SchemaError(id, "id", "instance has empty id");
  if (dataset == Dataset::finqa && !table)
    throw SchemaError(id, "table", "finqa instance " + id + " has no table");
  if (dataset == Dataset::tatdqa && table)
    throw SchemaError(id, "table", "tatdqa instance " + id + " carries a structured table");
  const bool wants_scale = dataset == Dataset::tatqa || dataset == Dataset::tatdqa;
  if (wants_scale != gold_scale.has_value())
    throw SchemaError(id, "scale", "instance " + id + ": gold scale presence does not match dataset");
  if (table) table->validate();
}

size_t step_count(TraceSchema s) {
  return s == TraceSchema::three_step ? 3 : 5;
}

const std::string& StepTrace::at(int index) const {
  return steps.at(index);
}

void StepTrace::validate() const {
  const size_t want = step_count(schema);
  if (steps.size() != want) throw Error("step trace has wrong row count");
  int expect = 1;
  for (const auto& [idx, output] : steps) {
    if (idx != expect++) throw Error("step trace indices are not 1..N");
    if (has_unescaped_pipe(output)) throw Error("step output contains unescaped '|'");
    if (output.find('\n') != std::string::npos || output.find('\r') != std::string::npos)
      throw Error("step output contains a newline");
  }
}

}  // namespace stepqa
