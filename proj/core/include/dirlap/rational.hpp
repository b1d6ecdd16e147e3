#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace dirlap {

// Edge weights and vertex measures are kept exact so that circulation balance
// (beta) can be certified as identically zero rather than merely small.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts an integer ("12", "-3"), a fraction ("p/q" with q > 0 after
// normalization), or a plain decimal ("0.25", "-1.5"). No exponent syntax.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace dirlap
