#include "stepqa/gold.hpp"

#include "stepqa/equation.hpp"
#include "stepqa/errors.hpp"
#include "stepqa/executor.hpp"
#include "stepqa/program.hpp"
#include "stepqa/prompts.hpp"
#include "stepqa/response.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

std::optional<PipelineKind> pipeline_from_string(const std::string& s) {
  const std::string k = to_lower(trim(s));
  if (k == "stepwise") return PipelineKind::stepwise;
  if (k == "e2e") return PipelineKind::e2e;
  return std::nullopt;
}

std::string to_string(PipelineKind k) {
  return k == PipelineKind::stepwise ? "stepwise" : "e2e";
}

std::vector<std::string> extract_numeric_evidence(const std::string& derivation) {
  std::vector<std::string> out;
  const size_t n = derivation.size();
  size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < n) {
    const char c = derivation[i];
    const bool starts_number = is_digit(c) || (c == '.' && i + 1 < n && is_digit(derivation[i + 1]));
    const bool after_word =
        i > 0 && (std::isalnum(static_cast<unsigned char>(derivation[i - 1])) || derivation[i - 1] == '_');
    if (!starts_number || after_word) {
      ++i;
      continue;
    }
    std::string lit;
    bool seen_dot = false;
    while (i < n) {
      const char d = derivation[i];
      if (is_digit(d)) {
        lit += d;
        ++i;
      } else if (d == ',' && i + 1 < n && is_digit(derivation[i + 1]) && !seen_dot) {
        lit += d;
        ++i;
      } else if (d == '.' && !seen_dot && i + 1 < n && is_digit(derivation[i + 1])) {
        lit += d;
        seen_dot = true;
        ++i;
      } else {
        break;
      }
    }
    if (i < n && derivation[i] == '%') ++i;  // literal kept as written, '%' dropped
    if (out.empty() || out.back() != lit) out.push_back(lit);
  }
  return out;
}

std::vector<std::string> split_count_items(const std::string& derivation) {
  std::vector<std::string> items;
  size_t start = 0;
  while (start <= derivation.size()) {
    const size_t pos = derivation.find("##", start);
    const std::string piece =
        trim(pos == std::string::npos ? derivation.substr(start)
                                      : derivation.substr(start, pos - start));
    if (!piece.empty()) items.push_back(piece);
    if (pos == std::string::npos) break;
    start = pos + 2;
  }
  return items;
}

namespace {

struct TraceParts {
  std::string evidence;
  std::string equation;
  std::string answer;
};

GoldResult fail(const std::string& reason) { return GoldResult{std::nullopt, reason}; }

// Builds evidence/equation for an arithmetic instance; tries the derivation
// as-is, then (for percent-scale answers) scaled by 100, keeping the first
// candidate whose execution reproduces the gold answer at 4 decimals.
std::optional<TraceParts> arithmetic_parts(const QAInstance& inst, std::string* why) {
  if (!inst.gold_derivation || trim(*inst.gold_derivation).empty()) {
    *why = "no_derivation";
    return std::nullopt;
  }
  std::string equation;
  if (inst.dataset == Dataset::finqa) {
    try {
      equation = finqa_program_to_infix(*inst.gold_derivation);
    } catch (const ProgramError& e) {
      *why = std::string("program_conversion: ") + e.what();
      return std::nullopt;
    }
  } else {
    equation = trim(*inst.gold_derivation);
  }

  std::vector<std::string> candidates{equation};
  if (inst.gold_scale == Scale::percent) candidates.push_back("(" + equation + ") * 100");

  bool any_valid = false;
  for (const auto& candidate : candidates) {
    const auto parsed = parse_expression(candidate);
    if (!parsed) continue;
    any_valid = true;
    AnswerValue executed = AnswerValue::text("");
    if ((*parsed)->is_comparison()) {
      auto v = eval_comparison(candidate);
      if (std::holds_alternative<EvalError>(v)) continue;
      executed = AnswerValue::boolean(std::get<bool>(v));
    } else {
      auto v = eval_arithmetic(candidate);
      if (std::holds_alternative<EvalError>(v)) continue;
      executed = AnswerValue::number(round_half_even(std::get<Rational>(v), 4));
    }
    if (answers_match_4dp(executed, inst.gold_answer)) {
      TraceParts parts;
      parts.equation = candidate;
      parts.evidence = join_hash_items(extract_numeric_evidence(equation));
      parts.answer = inst.gold_answer.render();
      return parts;
    }
  }
  *why = any_valid ? "inconsistent_execution" : "invalid_equation";
  return std::nullopt;
}

std::optional<TraceParts> parts_for(const QAInstance& inst, std::string* why) {
  const QuestionType qt =
      inst.dataset == Dataset::finqa ? QuestionType::arithmetic
                                     : inst.gold_question_type.value_or(QuestionType::arithmetic);
  switch (qt) {
    case QuestionType::arithmetic:
      return arithmetic_parts(inst, why);
    case QuestionType::span: {
      const std::string span = trim(inst.gold_answer.kind() == AnswerValue::Kind::spans &&
                                            !inst.gold_answer.as_spans().empty()
                                        ? inst.gold_answer.as_spans()[0]
                                        : inst.gold_answer.render());
      return TraceParts{span, "N.A.", span};
    }
    case QuestionType::multi_span: {
      std::vector<std::string> spans;
      if (inst.gold_answer.kind() == AnswerValue::Kind::spans) {
        for (const auto& s : inst.gold_answer.as_spans()) spans.push_back(trim(s));
      } else {
        spans.push_back(trim(inst.gold_answer.render()));
      }
      const std::string joined = join_hash_items(spans);
      return TraceParts{joined, "N.A.", joined};
    }
    case QuestionType::count: {
      const auto items = inst.gold_derivation ? split_count_items(*inst.gold_derivation)
                                              : std::vector<std::string>{};
      const std::string answer = inst.gold_answer.render();
      if (items.size() >= 2) {
        const std::string joined = join_hash_items(items);
        return TraceParts{joined, joined, answer};
      }
      // A single (or unknown) item cannot drive the count branch; the
      // executor keeps the stated answer instead.
      return TraceParts{items.empty() ? std::string() : items[0], "N.A.", answer};
    }
  }
  *why = "unknown_question_type";
  return std::nullopt;
}

}  // namespace

GoldResult build_gold_response(const QAInstance& inst, PipelineKind kind) {
  if (kind == PipelineKind::e2e) {
    TrainingInstance out;
    out.id = inst.id;
    out.prompt = build_e2e_prompt(inst);
    const std::string answer = inst.gold_answer.render();
    out.gold_response =
        inst.dataset == Dataset::finqa
            ? templates::final_statement(answer)
            : templates::final_statement_with_scale(
                  answer, render_scale(inst.gold_scale.value_or(Scale::none)));
    return GoldResult{std::move(out), {}};
  }

  std::string why;
  auto parts = parts_for(inst, &why);
  if (!parts) return fail(why);

  StepTrace trace;
  if (inst.dataset == Dataset::finqa) {
    trace.schema = TraceSchema::three_step;
    trace.steps[1] = escape_cell(parts->evidence);
    trace.steps[2] = escape_cell(parts->equation);
    trace.steps[3] = escape_cell(parts->answer);
  } else {
    if (!inst.gold_question_type) return fail("no_question_type");
    trace.schema = TraceSchema::five_step;
    trace.steps[1] = render_question_type(*inst.gold_question_type);
    trace.steps[2] = escape_cell(parts->evidence);
    trace.steps[3] = escape_cell(parts->equation);
    trace.steps[4] = escape_cell(parts->answer);
    trace.steps[5] = render_scale(inst.gold_scale.value_or(Scale::none));
  }

  // Consistency gate: the emitted trace must reproduce the annotated answer
  // when run through the external executor.
  const int o1 = trace.schema == TraceSchema::three_step ? 1 : 2;
  const FinalAnswer executed =
      execute(trace.at(o1), trace.at(o1 + 1), trace.at(o1 + 2),
              inst.dataset == Dataset::finqa ? std::nullopt : inst.gold_question_type);
  if (!answers_match_4dp(executed.value, inst.gold_answer)) return fail("inconsistent_execution");

  TrainingInstance out;
  out.id = inst.id;
  out.prompt = build_stepwise_prompt(inst);
  out.gold_response = render_response(trace, inst.gold_answer,
                                      inst.dataset == Dataset::finqa ? std::nullopt
                                                                     : inst.gold_scale);
  out.trace = std::move(trace);
  return GoldResult{std::move(out), {}};
}

}  // namespace stepqa
