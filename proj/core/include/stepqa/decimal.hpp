#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace stepqa {

using BigInt = boost::multiprecision::cpp_int;

// All arithmetic in the pipeline is exact rational arithmetic; rounding to a
// fixed number of decimal places happens only at the contract surfaces.
using Rational = boost::multiprecision::cpp_rational;

struct DecimalParse {
  Rational value;        // value as written, NOT scaled for a trailing '%'
  bool percent = false;  // a trailing '%' was present
};

// Parses a decimal literal: optional sign, digits with thousands commas,
// optional fraction, optional trailing '%'. The entire input (after trimming
// ASCII whitespace) must be consumed. Commas are accepted only between
// digits of the integer part.
std::optional<DecimalParse> parse_decimal(std::string_view text);

// Banker's rounding to `places` decimal digits.
Rational round_half_even(const Rational& x, int places);

// Rounds half-to-even at `places` decimals and renders without trailing
// zeros ("0.6080" and "0.608" render identically; integers carry no point).
std::string to_canonical_string(const Rational& x, int places = 4);

// Exact conversion of an IEEE double (used when a dataset stores a gold
// number as a JSON float).
Rational rational_from_double(double v);

}  // namespace stepqa
