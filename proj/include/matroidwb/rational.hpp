#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matroidwb {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& q);

// Closest rational to x with denominator at most max_denominator
// (continued-fraction convergents and semiconvergents).
Rational rationalize(double x, long max_denominator);

// Exact binary value of a finite double.
Rational exact_rational(double x);

}  // namespace matroidwb
