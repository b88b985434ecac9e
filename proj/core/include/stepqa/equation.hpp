#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "stepqa/decimal.hpp"

namespace stepqa {

// Abstract syntax for reasoner equations. A comparison may appear only at
// the root; everything below is arithmetic over literals.
struct Expr {
  enum class Kind { literal, negate, add, sub, mul, div, greater, less };

  Kind kind = Kind::literal;
  Rational value;  // literal only
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;  // unset for negate

  bool is_comparison() const { return kind == Kind::greater || kind == Kind::less; }
};

using ExprPtr = std::shared_ptr<const Expr>;

enum class EvalErrorKind { parse, division_by_zero };

struct EvalError {
  EvalErrorKind kind = EvalErrorKind::parse;
  std::string message;
};

// Parses the full string; nullopt carries no detail (use eval_* for
// messages). Numeric literals accept an optional sign (as unary minus),
// thousands commas, and a trailing '%' meaning x0.01.
std::optional<ExprPtr> parse_expression(std::string_view s);

// True iff s parses to a comparison-free expression.
bool validate_equation(std::string_view s);

// Exact, unrounded evaluation; standard precedence, left-associative.
std::variant<Rational, EvalError> eval_arithmetic(std::string_view s);

// Root must be '>' or '<'; both sides evaluated exactly.
std::variant<bool, EvalError> eval_comparison(std::string_view s);

// Exact evaluation of an already-parsed arithmetic subtree.
std::variant<Rational, EvalError> eval_expr(const ExprPtr& e);

}  // namespace stepqa
