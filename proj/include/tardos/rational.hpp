#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tardos {

using Int = boost::multiprecision::mpz_int;

// Canonical rational scalar: denominator > 0, gcd(|num|, den) = 1.
// GMP keeps arithmetic results canonical as long as the operands are
// canonical, so construction must go through make_rational (or the
// literal parser), never through raw num/den pairs.
using Rational = boost::multiprecision::mpq_rational;

Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(long long num, long long den = 1) {
  return make_rational(Int(num), Int(den));
}

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }
inline int sign_of(const Rational& r) { return r.sign(); }

/// Exact sign of a + b*sqrt(s) for rational a, b and rational s >= 0.
/// Decided by sign analysis plus one squaring; no floating point.
/// Throws std::domain_error when s < 0.
int compare_affine_sqrt(const Rational& a, const Rational& b, const Rational& s);

/// Smallest integer z with z >= v / sqrt(s), i.e. the smallest z for which
/// compare_affine_sqrt(-v, z, s) >= 0. Requires s > 0; exact for negative v
/// (ceiling toward +infinity). Throws std::domain_error when s <= 0.
Int ceil_div_by_sqrt(const Rational& v, const Rational& s);

/// Strict literal syntax `p` or `p/q`: optional leading minus, ASCII decimal
/// digits, q > 0. Anything else throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace tardos
