#include "stepqa/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "stepqa/text_util.hpp"

namespace stepqa {

std::string to_string(ScaleMode m) {
  return m == ScaleMode::strict ? "strict" : "ignore";
}

std::optional<ScaleMode> scale_mode_from_string(const std::string& s) {
  const std::string k = to_lower(trim(s));
  if (k == "strict") return ScaleMode::strict;
  if (k == "ignore") return ScaleMode::ignore;
  return std::nullopt;
}

namespace {

bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

std::optional<Rational> parse_metric_number(std::string_view token) {
  std::string s = trim(token);
  if (!s.empty() && s.front() == '$') s.erase(s.begin());
  if (auto dec = parse_decimal(s)) return dec->value;  // '%' stripped, not rescaled
  return std::nullopt;
}

std::string trim_edge_punct(const std::string& token) {
  static const std::string edge = "()[]{}\"'`.,;:!?";
  size_t b = 0;
  size_t e = token.size();
  while (b < e && edge.find(token[b]) != std::string::npos) ++b;
  while (e > b && edge.find(token[e - 1]) != std::string::npos) --e;
  return token.substr(b, e - b);
}

std::vector<std::string> normalize_tokens(const std::string& span) {
  std::vector<std::string> out;
  std::istringstream in(to_lower(span));
  std::string token;
  while (in >> token) {
    std::string norm;
    if (auto num = parse_metric_number(token)) {
      norm = to_canonical_string(*num);
    } else if (auto num2 = parse_metric_number(trim_edge_punct(token))) {
      norm = to_canonical_string(*num2);
    } else {
      for (char c : token) {
        if (!is_punct(c)) norm += c;
      }
    }
    if (norm.empty() || norm == "a" || norm == "an" || norm == "the") continue;
    out.push_back(std::move(norm));
  }
  return out;
}

std::vector<std::string> surface_spans(const AnswerValue& a) {
  switch (a.kind()) {
    case AnswerValue::Kind::spans: {
      if (a.as_spans().empty()) return {""};
      return a.as_spans();
    }
    default:
      return {a.render()};
  }
}

double bag_f1(const std::map<std::string, int>& pred, const std::map<std::string, int>& gold) {
  if (pred.empty() || gold.empty()) return 0.0;
  int common = 0;
  int pred_total = 0;
  int gold_total = 0;
  for (const auto& [t, c] : pred) pred_total += c;
  for (const auto& [t, c] : gold) gold_total += c;
  for (const auto& [t, c] : pred) {
    auto it = gold.find(t);
    if (it != gold.end()) common += std::min(c, it->second);
  }
  if (common == 0) return 0.0;
  const double p = static_cast<double>(common) / pred_total;
  const double r = static_cast<double>(common) / gold_total;
  return 2.0 * p * r / (p + r);
}

std::optional<Rational> span_number(const std::string& surface) {
  return parse_metric_number(surface);
}

}  // namespace

NormalizedAnswer normalize_answer(const AnswerValue& a) {
  NormalizedAnswer out;
  const auto spans = surface_spans(a);
  for (const auto& span : spans) {
    auto tokens = normalize_tokens(span);
    std::map<std::string, int> bag;
    std::string joined;
    for (const auto& t : tokens) {
      ++bag[t];
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    out.span_strings.push_back(std::move(joined));
    out.span_bags.push_back(std::move(bag));
  }
  if (a.kind() == AnswerValue::Kind::number) {
    out.number = round_half_even(a.as_number(), 4);
  } else if (spans.size() == 1) {
    if (auto n = span_number(spans[0])) out.number = round_half_even(*n, 4);
  }
  return out;
}

int exact_match(const AnswerValue& pred, std::optional<Scale> pred_scale,
                const AnswerValue& gold, std::optional<Scale> gold_scale, ScaleMode mode) {
  if (mode == ScaleMode::strict) {
    if (pred_scale.value_or(Scale::none) != gold_scale.value_or(Scale::none)) return 0;
  }
  auto np = normalize_answer(pred);
  auto ng = normalize_answer(gold);
  if (np.number && ng.number) return *np.number == *ng.number ? 1 : 0;
  std::sort(np.span_strings.begin(), np.span_strings.end());
  std::sort(ng.span_strings.begin(), ng.span_strings.end());
  return np.span_strings == ng.span_strings ? 1 : 0;
}

double numeracy_f1(const AnswerValue& pred, const AnswerValue& gold) {
  const auto np = normalize_answer(pred);
  const auto ng = normalize_answer(gold);

  // F1 collapses to 0 unless a numeric gold is matched exactly.
  if (ng.number && (!np.number || *np.number != *ng.number)) return 0.0;

  const auto pred_spans = surface_spans(pred);
  const auto gold_spans = surface_spans(gold);
  const size_t np_n = np.span_bags.size();
  const size_t ng_n = ng.span_bags.size();

  struct Pair {
    double f1;
    size_t gold_idx;
    size_t pred_idx;
  };
  std::vector<Pair> pairs;
  pairs.reserve(np_n * ng_n);
  for (size_t g = 0; g < ng_n; ++g) {
    const auto gold_num = span_number(gold_spans[g]);
    for (size_t p = 0; p < np_n; ++p) {
      double f1 = bag_f1(np.span_bags[p], ng.span_bags[g]);
      if (gold_num) {
        const auto pred_num = span_number(pred_spans[p]);
        if (!pred_num || round_half_even(*pred_num, 4) != round_half_even(*gold_num, 4)) f1 = 0.0;
      }
      pairs.push_back({f1, g, p});
    }
  }
  // Greedy one-to-one alignment by descending pairwise F1; ties resolved by
  // lowest gold index then lowest pred index for determinism.
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.f1 != b.f1) return a.f1 > b.f1;
    if (a.gold_idx != b.gold_idx) return a.gold_idx < b.gold_idx;
    return a.pred_idx < b.pred_idx;
  });
  std::vector<bool> gold_used(ng_n, false);
  std::vector<bool> pred_used(np_n, false);
  double total = 0.0;
  for (const auto& pr : pairs) {
    if (gold_used[pr.gold_idx] || pred_used[pr.pred_idx]) continue;
    gold_used[pr.gold_idx] = true;
    pred_used[pr.pred_idx] = true;
    total += pr.f1;
  }
  const size_t denom = std::max(np_n, ng_n);
  return denom == 0 ? 0.0 : total / static_cast<double>(denom);
}

double numeracy_f1(const AnswerValue& pred, const std::vector<AnswerValue>& golds) {
  double best = 0.0;
  for (const auto& g : golds) best = std::max(best, numeracy_f1(pred, g));
  return best;
}

EvalReport evaluate_split(const std::vector<EvalRecord>& records, ScaleMode mode) {
  EvalReport report;
  report.scale_mode = mode;
  report.n = records.size();

  double em_sum = 0.0;
  double f1_sum = 0.0;
  for (const auto& rec : records) {
    const int em = exact_match(rec.pred, rec.pred_scale, rec.gold, rec.gold_scale, mode);
    const double f1 = numeracy_f1(rec.pred, rec.gold);
    em_sum += em;
    f1_sum += f1;
    const std::string key = rec.gold_type ? to_string(*rec.gold_type) : "untyped";
    auto& slot = report.per_type[key];
    slot.em += em;
    slot.f1 += f1;
    slot.count += 1;
  }
  if (!records.empty()) {
    report.em = em_sum / static_cast<double>(records.size());
    report.f1 = f1_sum / static_cast<double>(records.size());
  }
  for (auto& [key, slot] : report.per_type) {
    if (slot.count > 0) {
      slot.em /= static_cast<double>(slot.count);
      slot.f1 /= static_cast<double>(slot.count);
    }
  }
  return report;
}

}  // namespace stepqa
