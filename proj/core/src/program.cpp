#include "stepqa/program.hpp"

#include <vector>

#include "stepqa/decimal.hpp"
#include "stepqa/text_util.hpp"

namespace stepqa {

namespace {

struct Step {
  std::string op;
  std::vector<std::string> args;
};

std::vector<Step> parse_steps(std::string_view program) {
  std::vector<Step> steps;
  size_t i = 0;
  const size_t n = program.size();
  auto skip_ws = [&] {
    while (i < n && (program[i] == ' ' || program[i] == '\t' || program[i] == '\n' ||
                     program[i] == '\r' || program[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < n) {
    Step step;
    while (i < n && (std::isalnum(static_cast<unsigned char>(program[i])) || program[i] == '_')) {
      step.op += program[i];
      ++i;
    }
    if (step.op.empty())
      throw ProgramError(ProgramError::Kind::malformed, "expected operator name in program");
    if (i >= n || program[i] != '(')
      throw ProgramError(ProgramError::Kind::malformed, "expected '(' after " + step.op);
    ++i;
    std::string arg;
    bool closed = false;
    while (i < n) {
      const char c = program[i];
      if (c == ')') {
        step.args.push_back(trim(arg));
        ++i;
        closed = true;
        break;
      }
      if (c == ',') {
        step.args.push_back(trim(arg));
        arg.clear();
        ++i;
        continue;
      }
      arg += c;
      ++i;
    }
    if (!closed)
      throw ProgramError(ProgramError::Kind::malformed, "unterminated argument list in program");
    steps.push_back(std::move(step));
    skip_ws();
  }
  if (steps.empty())
    throw ProgramError(ProgramError::Kind::malformed, "empty program");
  return steps;
}

std::string literal_arg(const std::string& raw) {
  std::string s = raw;
  if (!s.empty() && s.front() == '$') s.erase(s.begin());
  if (!s.empty() && s.back() == '%') s.pop_back();  // digits kept as written
  s = trim(s);
  if (s.rfind("const_", 0) == 0) {
    const std::string c = s.substr(6);
    if (c == "m1") return "-1";
    if (!c.empty() && c.find_first_not_of("0123456789.") == std::string::npos) return c;
    throw ProgramError(ProgramError::Kind::unsupported_operator, "unsupported constant: " + s);
  }
  if (!parse_decimal(s))
    throw ProgramError(ProgramError::Kind::malformed, "non-numeric argument: " + raw);
  return s;
}

}  // namespace

std::string finqa_program_to_infix(std::string_view program) {
  const auto steps = parse_steps(program);

  std::vector<std::string> rendered;    // parenthesized form per step
  std::vector<bool> is_comparison;

  for (size_t idx = 0; idx < steps.size(); ++idx) {
    const Step& step = steps[idx];

    const char* symbol = nullptr;
    bool comparison = false;
    if (step.op == "add") symbol = "+";
    else if (step.op == "subtract") symbol = "-";
    else if (step.op == "multiply") symbol = "*";
    else if (step.op == "divide") symbol = "/";
    else if (step.op == "greater") { symbol = ">"; comparison = true; }
    else throw ProgramError(ProgramError::Kind::unsupported_operator,
                            "unsupported operator: " + step.op);

    if (step.args.size() != 2)
      throw ProgramError(ProgramError::Kind::malformed,
                         step.op + " expects 2 arguments, got " + std::to_string(step.args.size()));

    auto resolve = [&](const std::string& arg) -> std::string {
      if (!arg.empty() && arg[0] == '#') {
        const std::string digits = arg.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
          throw ProgramError(ProgramError::Kind::malformed, "bad step reference: " + arg);
        const size_t ref = std::stoul(digits);
        if (ref >= idx)
          throw ProgramError(ProgramError::Kind::dangling_step_ref,
                             "step reference " + arg + " points at or past step " + std::to_string(idx));
        if (is_comparison[ref])
          throw ProgramError(ProgramError::Kind::malformed,
                             "comparison result used as operand: " + arg);
        return rendered[ref];
      }
      return literal_arg(arg);
    };

    const std::string lhs = resolve(step.args[0]);
    const std::string rhs = resolve(step.args[1]);

    if (comparison && idx + 1 != steps.size())
      throw ProgramError(ProgramError::Kind::malformed, "comparison must be the final step");

    const std::string bare = lhs + " " + symbol + " " + rhs;
    rendered.push_back(comparison ? bare : "(" + bare + ")");
    is_comparison.push_back(comparison);
  }

  const size_t last = steps.size() - 1;
  if (is_comparison[last]) return rendered[last];
  if (steps.size() == 1) return rendered[last];
  // multi-step: the final step is rendered bare, its operands keep their parens
  return rendered[last].substr(1, rendered[last].size() - 2);
}

}  // namespace stepqa
