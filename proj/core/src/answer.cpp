#include "stepqa/answer.hpp"

#include "stepqa/text_util.hpp"

namespace stepqa {

std::string AnswerValue::render() const {
  switch (kind()) {
    case Kind::number:
      return to_canonical_string(as_number());
    case Kind::text:
      return as_text();
    case Kind::spans:
      return join_hash_items(as_spans());
    case Kind::boolean:
      return as_boolean() ? "yes" : "no";
  }
  return {};
}

AnswerValue AnswerValue::from_surface(const std::string& s) {
  const std::string t = trim(s);
  if (t.find('#') != std::string::npos) {
    return spans(split_hash_items(t));
  }
  if (auto dec = parse_decimal(t)) {
    return number(dec->value);
  }
  const std::string low = to_lower(t);
  if (low == "yes" || low == "true") return boolean(true);
  if (low == "no" || low == "false") return boolean(false);
  return text(t);
}

namespace {

std::optional<Rational> numeric_view(const AnswerValue& v) {
  if (v.kind() == AnswerValue::Kind::number) return v.as_number();
  if (v.kind() == AnswerValue::Kind::text) {
    if (auto dec = parse_decimal(v.as_text())) return dec->value;
  }
  if (v.kind() == AnswerValue::Kind::spans && v.as_spans().size() == 1) {
    if (auto dec = parse_decimal(v.as_spans()[0])) return dec->value;
  }
  return std::nullopt;
}

std::optional<bool> boolean_view(const AnswerValue& v) {
  if (v.kind() == AnswerValue::Kind::boolean) return v.as_boolean();
  if (v.kind() == AnswerValue::Kind::text) {
    const std::string low = to_lower(trim(v.as_text()));
    if (low == "yes" || low == "true") return true;
    if (low == "no" || low == "false") return false;
  }
  return std::nullopt;
}

}  // namespace

bool answers_match_4dp(const AnswerValue& a, const AnswerValue& b) {
  const auto na = numeric_view(a);
  const auto nb = numeric_view(b);
  if (na && nb) return round_half_even(*na, 4) == round_half_even(*nb, 4);

  const auto ba = boolean_view(a);
  const auto bb = boolean_view(b);
  if (ba && bb) return *ba == *bb;

  if (a.kind() == AnswerValue::Kind::spans || b.kind() == AnswerValue::Kind::spans) {
    auto spans_of = [](const AnswerValue& v) {
      std::vector<std::string> out;
      if (v.kind() == AnswerValue::Kind::spans) {
        for (const auto& s : v.as_spans()) out.push_back(trim(s));
      } else {
        out.push_back(trim(v.render()));
      }
      return out;
    };
    return spans_of(a) == spans_of(b);
  }

  return trim(a.render()) == trim(b.render());
}

}  // namespace stepqa
