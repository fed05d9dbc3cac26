#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropmc {

// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

// Accepts "p", "p/q" or a finite decimal such as "3.5" or "-0.25".
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Shortest round-trip decimal for a double.
std::string format_double(double x);
double parse_double(std::string_view text);

}  // namespace tropmc
