#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mpp {

using Rational = mpq_class;
using Integer = mpz_class;
using Point = std::vector<Rational>;

/// Canonical text: "3", "-1/2".
std::string to_string(const Rational& q);
/// Always "num/den" with den > 0 and gcd 1, e.g. "3/1".
std::string to_fraction_string(const Rational& q);
std::string to_string(const Point& p);

/// Accepts "7", "-7", "3/4", "-3/4" (surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

}  // namespace mpp
