#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stepqa/decimal.hpp"

namespace stepqa {

// The unit of metric comparison: a number (exact), a text span, a list of
// spans, or a boolean.
class AnswerValue {
public:
  enum class Kind { number, text, spans, boolean };

  static AnswerValue number(Rational v) { return AnswerValue(std::move(v)); }
  static AnswerValue text(std::string v) { return AnswerValue(Text{std::move(v)}); }
  static AnswerValue spans(std::vector<std::string> v) { return AnswerValue(std::move(v)); }
  static AnswerValue boolean(bool v) { return AnswerValue(v); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }

  const Rational& as_number() const { return std::get<Rational>(value_); }
  const std::string& as_text() const { return std::get<Text>(value_).s; }
  const std::vector<std::string>& as_spans() const { return std::get<std::vector<std::string>>(value_); }
  bool as_boolean() const { return std::get<bool>(value_); }

  // Surface form: numbers render canonically at 4 decimals, booleans as
  // "yes"/"no", span lists joined with " # ".
  std::string render() const;

  // Best-effort interpretation of a model-produced string: '#'-separated
  // lists become spans, numeric literals numbers, yes/no booleans, anything
  // else text.
  static AnswerValue from_surface(const std::string& s);

  bool operator==(const AnswerValue& other) const = default;

private:
  struct Text {
    std::string s;
    bool operator==(const Text&) const = default;
  };

  explicit AnswerValue(Rational v) : value_(std::move(v)) {}
  explicit AnswerValue(Text v) : value_(std::move(v)) {}
  explicit AnswerValue(std::vector<std::string> v) : value_(std::move(v)) {}
  explicit AnswerValue(bool v) : value_(v) {}

  std::variant<Rational, Text, std::vector<std::string>, bool> value_;
};

// Equality used by the gold-consistency check: numbers compare after
// rounding both sides to 4 decimals; a text that parses as a number compares
// numerically against a number; "yes"/"no" text matches a boolean.
bool answers_match_4dp(const AnswerValue& a, const AnswerValue& b);

}  // namespace stepqa
