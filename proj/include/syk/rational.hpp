#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace syk {

/// Exact rational scalar. GMP keeps it canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace syk
