#include "tardos/rational.hpp"

#include <cctype>

namespace tardos {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  mpq_canonicalize(r.backend().data());
  return r;
}

int compare_affine_sqrt(const Rational& a, const Rational& b, const Rational& s) {
  if (s < 0) throw std::domain_error("compare_affine_sqrt: negative radicand");
  if (s == 0 || b == 0) return sign_of(a);
  if (a == 0) return sign_of(b);
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(s) decided by squaring.
  const Rational a2 = a * a;
  const Rational b2s = b * b * s;
  if (a2 == b2s) return 0;
  return (a2 > b2s) ? sa : sb;
}

namespace {

// floor(sqrt(S) / D) for S >= 0, D > 0: largest z >= 0 with z^2 * D^2 <= S.
Int floor_sqrt_div(const Int& S, const Int& D) {
  Int z = boost::multiprecision::sqrt(S) / D;  // initial guess, never above by much
  const Int D2 = D * D;
  while ((z + 1) * (z + 1) * D2 <= S) ++z;
  while (z > 0 && z * z * D2 > S) --z;
  return z;
}

// ceil(sqrt(S) / D): smallest z >= 0 with z^2 * D^2 >= S.
Int ceil_sqrt_div(const Int& S, const Int& D) {
  Int z = boost::multiprecision::sqrt(S) / D;
  const Int D2 = D * D;
  while (z * z * D2 < S) ++z;
  while (z > 0 && (z - 1) * (z - 1) * D2 >= S) --z;
  return z;
}

}  // namespace

Int ceil_div_by_sqrt(const Rational& v, const Rational& s) {
  if (s <= 0) throw std::domain_error("ceil_div_by_sqrt: radicand must be positive");
  if (v == 0) return 0;
  // v / sqrt(s) = p*sqrt(u*w) / (q*u)  for v = p/q, s = u/w (all canonical, q,u,w > 0).
  const Int p = numerator_of(v);
  const Int q = denominator_of(v);
  const Int u = numerator_of(s);
  const Int w = denominator_of(s);
  const Int D = q * u;
  const Int S = p * p * u * w;
  if (p > 0) return ceil_sqrt_div(S, D);
  return -floor_sqrt_div(S, D);
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  const std::string num_str(text.substr(0, i));
  if (i == text.size()) return make_rational(Int(num_str), Int(1));
  if (text[i] != '/') throw bad();
  ++i;
  const std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != text.size()) throw bad();
  const Int den(std::string(text.substr(den_begin)));
  if (den == 0) throw bad();
  return make_rational(Int(num_str), den);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace tardos
