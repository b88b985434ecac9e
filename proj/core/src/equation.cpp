#include "stepqa/equation.hpp"

namespace stepqa {

namespace {

constexpr int kMaxDepth = 200;  // guards the recursive parser against hostile nesting

struct Parser {
  std::string_view s;
  size_t pos = 0;
  std::string error;

  bool fail(const std::string& msg) {
    if (error.empty()) error = msg;
    return false;
  }

  void skip_ws() {
    while (pos < s.size()) {
      const char c = s[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') ++pos;
      else break;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos >= s.size()) return std::nullopt;
    return s[pos];
  }

  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  ExprPtr parse_number() {
    skip_ws();
    const size_t start = pos;
    bool any_digit = false;
    while (pos < s.size()) {
      const char c = s[pos];
      if (is_digit(c)) {
        any_digit = true;
        ++pos;
      } else if (c == ',' && any_digit && pos + 1 < s.size() && is_digit(s[pos + 1])) {
        ++pos;  // comma between digits
      } else {
        break;
      }
    }
    if (pos < s.size() && s[pos] == '.') {
      if (pos + 1 < s.size() && is_digit(s[pos + 1])) {
        ++pos;
        while (pos < s.size() && is_digit(s[pos])) {
          any_digit = true;
          ++pos;
        }
      } else if (!any_digit) {
        fail("expected digits");
        return nullptr;
      }
    }
    if (!any_digit) {
      fail("expected a number");
      return nullptr;
    }
    if (pos < s.size() && s[pos] == '%') ++pos;

    auto parsed = parse_decimal(s.substr(start, pos - start));
    if (!parsed) {
      fail("malformed number literal");
      return nullptr;
    }
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::literal;
    node->value = parsed->percent ? Rational(parsed->value / 100) : parsed->value;
    return node;
  }

  ExprPtr parse_factor(int depth) {
    if (depth > kMaxDepth) {
      fail("expression too deeply nested");
      return nullptr;
    }
    auto c = peek();
    if (!c) {
      fail("unexpected end of input");
      return nullptr;
    }
    if (*c == '-') {
      ++pos;
      auto inner = parse_factor(depth + 1);
      if (!inner) return nullptr;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::negate;
      node->lhs = inner;
      return node;
    }
    if (*c == '+') {
      ++pos;
      return parse_factor(depth + 1);
    }
    if (*c == '(') {
      ++pos;
      auto inner = parse_arith(depth + 1);
      if (!inner) return nullptr;
      if (!consume(')')) {
        fail("missing ')'");
        return nullptr;
      }
      return inner;
    }
    if (is_digit(*c) || *c == '.') return parse_number();
    fail(std::string("unexpected character '") + *c + "'");
    return nullptr;
  }

  ExprPtr parse_term(int depth) {
    auto lhs = parse_factor(depth + 1);
    if (!lhs) return nullptr;
    while (true) {
      auto c = peek();
      if (!c || (*c != '*' && *c != '/')) return lhs;
      ++pos;
      auto rhs = parse_factor(depth + 1);
      if (!rhs) return nullptr;
      auto node = std::make_shared<Expr>();
      node->kind = (*c == '*') ? Expr::Kind::mul : Expr::Kind::div;
      node->lhs = lhs;
      node->rhs = rhs;
      lhs = node;
    }
  }

  ExprPtr parse_arith(int depth) {
    if (depth > kMaxDepth) {
      fail("expression too deeply nested");
      return nullptr;
    }
    auto lhs = parse_term(depth + 1);
    if (!lhs) return nullptr;
    while (true) {
      auto c = peek();
      if (!c || (*c != '+' && *c != '-')) return lhs;
      ++pos;
      auto rhs = parse_term(depth + 1);
      if (!rhs) return nullptr;
      auto node = std::make_shared<Expr>();
      node->kind = (*c == '+') ? Expr::Kind::add : Expr::Kind::sub;
      node->lhs = lhs;
      node->rhs = rhs;
      lhs = node;
    }
  }

  // Root rule: arithmetic with at most one comparison at the top.
  ExprPtr parse_root() {
    auto lhs = parse_arith(0);
    if (!lhs) return nullptr;
    auto c = peek();
    if (c && (*c == '>' || *c == '<')) {
      ++pos;
      auto rhs = parse_arith(0);
      if (!rhs) return nullptr;
      auto node = std::make_shared<Expr>();
      node->kind = (*c == '>') ? Expr::Kind::greater : Expr::Kind::less;
      node->lhs = lhs;
      node->rhs = rhs;
      lhs = node;
    }
    if (!eof()) {
      fail("trailing characters after expression");
      return nullptr;
    }
    return lhs;
  }
};

std::variant<Rational, EvalError> eval_node(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.value;
    case Expr::Kind::negate: {
      auto inner = eval_node(*e.lhs);
      if (std::holds_alternative<EvalError>(inner)) return inner;
      return Rational(-std::get<Rational>(inner));
    }
    default: {
      auto l = eval_node(*e.lhs);
      if (std::holds_alternative<EvalError>(l)) return l;
      auto r = eval_node(*e.rhs);
      if (std::holds_alternative<EvalError>(r)) return r;
      const Rational& a = std::get<Rational>(l);
      const Rational& b = std::get<Rational>(r);
      switch (e.kind) {
        case Expr::Kind::add: return Rational(a + b);
        case Expr::Kind::sub: return Rational(a - b);
        case Expr::Kind::mul: return Rational(a * b);
        case Expr::Kind::div:
          if (b == 0) return EvalError{EvalErrorKind::division_by_zero, "division by zero"};
          return Rational(a / b);
        default:
          return EvalError{EvalErrorKind::parse, "comparison nested in arithmetic"};
      }
    }
  }
}

}  // namespace

std::optional<ExprPtr> parse_expression(std::string_view s) {
  Parser p{s};
  auto root = p.parse_root();
  if (!root) return std::nullopt;
  return root;
}

bool validate_equation(std::string_view s) {
  auto e = parse_expression(s);
  return e && !(*e)->is_comparison();
}

std::variant<Rational, EvalError> eval_expr(const ExprPtr& e) {
  if (!e) return EvalError{EvalErrorKind::parse, "empty expression"};
  if (e->is_comparison()) return EvalError{EvalErrorKind::parse, "expression is a comparison"};
  return eval_node(*e);
}

std::variant<Rational, EvalError> eval_arithmetic(std::string_view s) {
  Parser p{s};
  auto root = p.parse_root();
  if (!root) return EvalError{EvalErrorKind::parse, p.error};
  if (root->is_comparison())
    return EvalError{EvalErrorKind::parse, "expression is a comparison"};
  return eval_node(*root);
}

std::variant<bool, EvalError> eval_comparison(std::string_view s) {
  Parser p{s};
  auto root = p.parse_root();
  if (!root) return EvalError{EvalErrorKind::parse, p.error};
  if (!root->is_comparison())
    return EvalError{EvalErrorKind::parse, "expression is not a comparison"};
  auto l = eval_node(*root->lhs);
  if (std::holds_alternative<EvalError>(l)) return std::get<EvalError>(l);
  auto r = eval_node(*root->rhs);
  if (std::holds_alternative<EvalError>(r)) return std::get<EvalError>(r);
  const Rational& a = std::get<Rational>(l);
  const Rational& b = std::get<Rational>(r);
  return root->kind == Expr::Kind::greater ? a > b : a < b;
}

}  // namespace stepqa
