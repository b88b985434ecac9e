#pragma once

#include <string>
#include <string_view>

#include "stepqa/errors.hpp"

namespace stepqa {

// Converts an operator-sequence program such as
//   "subtract(201, 125), divide(#0, 125)"
// into an infix equation, here "(201 - 125) / 125". Step references (#k)
// substitute the parenthesized rendering of the referenced step; a
// single-step program keeps its parentheses: "add(1, 2)" -> "(1 + 2)".
//
// Supported operators: add, subtract, multiply, divide, and greater (which
// must be the final step and yields a root comparison). const_<n> and
// const_m1 arguments become numeric literals. A trailing '%' or leading '$'
// on a literal argument is dropped, the digits kept as written.
//
// Throws ProgramError: unsupported_operator (named), dangling_step_ref, or
// malformed.
std::string finqa_program_to_infix(std::string_view program);

}  // namespace stepqa
