#include "stepqa/response.hpp"

#include "stepqa/markdown.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

namespace {

constexpr std::string_view kStatementMarker = "The answer is:";
constexpr std::string_view kScaleMarker = "#### and its corresponding scale is:";

struct Block {
  std::vector<std::string> lines;
  std::string raw;
};

std::vector<Block> table_blocks(std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    const std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    const std::string t = trim(line);
    const bool is_row = !t.empty() && has_unescaped_pipe(t);
    if (is_row) {
      current.lines.push_back(t);
      current.raw += t;
      current.raw += '\n';
    } else if (!current.lines.empty()) {
      blocks.push_back(std::move(current));
      current = Block{};
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!current.lines.empty()) blocks.push_back(std::move(current));
  return blocks;
}

std::optional<int> parse_step_index(const std::string& cell) {
  if (cell.empty() || cell.size() > 4) return std::nullopt;
  int v = 0;
  for (char c : cell) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Extracts ordered step outputs from a block, or nullopt when the block is
// not a step table. Junk rows before step 1 are skipped, junk after the last
// step ends the table, and a fresh "1" row (or header) restarts collection so
// that the last table in the block wins.
std::optional<std::vector<std::string>> block_steps(const Block& block) {
  std::vector<std::string> outputs;
  for (const auto& line : block.lines) {
    auto cells = split_table_row(line);
    if (is_separator_row(cells)) continue;
    if (cells.empty()) continue;
    if (to_lower(cells[0]) == "step") {
      outputs.clear();  // header row starts a (new) table
      continue;
    }
    auto idx = parse_step_index(cells[0]);
    std::string output;
    for (size_t i = 1; i < cells.size(); ++i) {
      if (i > 1) output += " | ";
      output += cells[i];
    }
    if (idx && *idx == static_cast<int>(outputs.size()) + 1) {
      outputs.push_back(std::move(output));
    } else if (idx && *idx == 1) {
      outputs.clear();
      outputs.push_back(std::move(output));
    } else if (outputs.empty()) {
      continue;  // leading junk row
    } else {
      break;  // trailing junk row ends the table
    }
  }
  if (outputs.empty()) return std::nullopt;
  return outputs;
}

}  // namespace

StepTableResult parse_step_table(std::string_view text, TraceSchema schema) {
  const auto blocks = table_blocks(text);

  const size_t want = step_count(schema);
  std::optional<std::vector<std::string>> best;         // last schema-sized table
  std::optional<std::vector<std::string>> last_parsed;  // last table of any size
  std::string last_parsed_raw;

  for (const auto& block : blocks) {
    auto steps = block_steps(block);
    if (!steps) continue;
    if (steps->size() == want) best = steps;
    last_parsed = std::move(steps);
    last_parsed_raw = block.raw;
  }

  if (best) {
    StepTrace trace;
    trace.schema = schema;
    for (size_t i = 0; i < best->size(); ++i)
      trace.steps[static_cast<int>(i) + 1] = (*best)[i];
    return {std::move(trace), TableParseError::none, {}};
  }
  if (last_parsed) {
    return {std::nullopt, TableParseError::schema_mismatch, last_parsed_raw};
  }
  return {std::nullopt, TableParseError::no_table_found, std::string(text.substr(0, 200))};
}

std::optional<FinalStatement> parse_final_statement(std::string_view text, TraceSchema /*schema*/) {
  const size_t at = text.rfind(kStatementMarker);
  if (at == std::string_view::npos) return std::nullopt;

  size_t begin = at + kStatementMarker.size();
  size_t end = text.find('\n', begin);
  if (end == std::string_view::npos) end = text.size();
  const std::string_view line = text.substr(begin, end - begin);

  FinalStatement out;
  const size_t scale_at = line.find(kScaleMarker);
  if (scale_at != std::string_view::npos) {
    out.answer = trim(line.substr(0, scale_at));
    out.scale = trim(line.substr(scale_at + kScaleMarker.size()));
  } else {
    out.answer = trim(line);
  }
  return out;
}

PredictionResult parse_prediction(std::string_view text, TraceSchema schema) {
  PredictionResult result;

  auto table = parse_step_table(text, schema);
  auto statement = parse_final_statement(text, schema);

  if (!table.trace && !statement) {
    result.flags.push_back("unparseable");
    return result;
  }

  Prediction pred;

  if (table.trace) {
    const StepTrace& t = *table.trace;
    if (schema == TraceSchema::three_step) {
      pred.evidence = t.at(1);
      pred.equation = t.at(2);
      pred.raw_answer = t.at(3);
    } else {
      pred.question_type = try_question_type_parse(t.at(1));
      if (!pred.question_type) result.flags.push_back("bad_question_type");
      pred.evidence = t.at(2);
      pred.equation = t.at(3);
      pred.raw_answer = t.at(4);
      pred.scale = try_scale_parse(t.at(5));
      if (!pred.scale) result.flags.push_back("bad_scale");
    }
    result.trace = *table.trace;
  } else {
    result.flags.push_back(table.error == TableParseError::schema_mismatch
                               ? "degraded_schema_mismatch"
                               : "degraded_no_table");
    if (statement) pred.raw_answer = escape_cell(statement->answer);
  }

  if (statement) {
    pred.final_answer = AnswerValue::from_surface(statement->answer);
    if (schema == TraceSchema::five_step && !pred.scale && statement->scale) {
      pred.scale = try_scale_parse(*statement->scale);
      if (!pred.scale) result.flags.push_back("bad_statement_scale");
    }
  } else {
    result.flags.push_back("no_final_statement");
    pred.final_answer = AnswerValue::from_surface(unescape_cell(pred.raw_answer));
  }

  result.prediction = std::move(pred);
  return result;
}

std::string render_response(const StepTrace& trace, const AnswerValue& final_answer,
                            std::optional<Scale> scale) {
  trace.validate();
  std::string out = "| step | output |\n";
  for (const auto& [idx, output] : trace.steps) {
    out += "| " + std::to_string(idx) + " | " + output + " |\n";
  }
  out += "The answer is: " + final_answer.render();
  if (trace.schema == TraceSchema::five_step) {
    out += " #### and its corresponding scale is: ";
    out += render_scale(scale.value_or(Scale::none));
  }
  return out;
}

}  // namespace stepqa
