#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stpath {

/// Exact rational backed by GMP; values are kept in canonical form.
using Rational = mpq_class;

/// Canonical "p/q" form; integers are written with q = 1.
std::string to_fraction_string(const Rational& r);
/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_fraction(std::string_view text);
double to_double(const Rational& r);

}  // namespace stpath
