#include "stepqa/analysis.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "stepqa/decimal.hpp"
#include "stepqa/equation.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

std::string to_string(ErrorStep s) {
  return s == ErrorStep::extractor ? "extractor" : "reasoner";
}

std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::wrong_evidence: return "wrong_evidence";
    case ErrorKind::missed_evidence: return "missed_evidence";
    case ErrorKind::redundant_evidence: return "redundant_evidence";
    case ErrorKind::wrong_operators: return "wrong_operators";
    case ErrorKind::wrong_values: return "wrong_values";
  }
  return "wrong_evidence";
}

ErrorStep step_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::wrong_operators:
    case ErrorKind::wrong_values:
      return ErrorStep::reasoner;
    default:
      return ErrorStep::extractor;
  }
}

namespace {

// Canonicalized evidence items: numbers in 4-decimal canonical form,
// everything else lowercased.
std::set<std::string> evidence_set(const std::string& cell) {
  std::set<std::string> out;
  for (const auto& item : split_hash_items(unescape_cell(cell))) {
    if (item.empty()) continue;
    if (auto dec = parse_decimal(item)) out.insert(to_canonical_string(dec->value));
    else out.insert(to_lower(item));
  }
  return out;
}

bool same_skeleton(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::literal) return true;  // values ignored
  if (a.lhs && b.lhs) {
    if (!same_skeleton(*a.lhs, *b.lhs)) return false;
  } else if (a.lhs || b.lhs) {
    return false;
  }
  if (a.rhs && b.rhs) return same_skeleton(*a.rhs, *b.rhs);
  return !a.rhs && !b.rhs;
}

void collect_operands(const Expr& e, std::vector<Rational>* seq) {
  if (e.kind == Expr::Kind::literal) {
    seq->push_back(e.value);
    return;
  }
  if (e.lhs) collect_operands(*e.lhs, seq);
  if (e.rhs) collect_operands(*e.rhs, seq);
}

}  // namespace

std::optional<ErrorCategory> categorize_error(const Prediction& pred,
                                              const StepTrace& gold_trace) {
  const bool five = gold_trace.schema == TraceSchema::five_step;
  const std::string& gold_evidence = gold_trace.at(five ? 2 : 1);
  const std::string& gold_equation = gold_trace.at(five ? 3 : 2);

  const auto pred_set = evidence_set(pred.evidence);
  const auto gold_set = evidence_set(gold_evidence);

  if (pred_set != gold_set) {
    const bool pred_subset =
        std::includes(gold_set.begin(), gold_set.end(), pred_set.begin(), pred_set.end());
    const bool gold_subset =
        std::includes(pred_set.begin(), pred_set.end(), gold_set.begin(), gold_set.end());
    if (pred_subset) return ErrorCategory{ErrorStep::extractor, ErrorKind::missed_evidence};
    if (gold_subset) return ErrorCategory{ErrorStep::extractor, ErrorKind::redundant_evidence};
    return ErrorCategory{ErrorStep::extractor, ErrorKind::wrong_evidence};
  }

  const auto pred_expr = parse_expression(unescape_cell(pred.equation));
  const auto gold_expr = parse_expression(unescape_cell(gold_equation));
  if (!pred_expr || !gold_expr) return std::nullopt;

  std::vector<Rational> pred_ops;
  std::vector<Rational> gold_ops;
  collect_operands(**pred_expr, &pred_ops);
  collect_operands(**gold_expr, &gold_ops);

  if (same_skeleton(**pred_expr, **gold_expr)) {
    if (pred_ops != gold_ops)
      return ErrorCategory{ErrorStep::reasoner, ErrorKind::wrong_values};
    return std::nullopt;  // identical equation; the error lies elsewhere
  }
  const std::set<Rational> pred_vals(pred_ops.begin(), pred_ops.end());
  const std::set<Rational> gold_vals(gold_ops.begin(), gold_ops.end());
  if (pred_vals == gold_vals)
    return ErrorCategory{ErrorStep::reasoner, ErrorKind::wrong_operators};
  return std::nullopt;
}

}  // namespace stepqa
