#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace roughver {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form "p/q" with q > 0 and gcd(p, q) = 1. Integers keep the
/// "/1" so that every emitted rational has the same shape.
std::string format_rational(const Rational& r);

/// Accepts "p", "p/q", with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace roughver
