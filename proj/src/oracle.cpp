#include "tardos/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace tardos {

namespace {

using I128 = __int128;

Int int128_to_mpz(I128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int r(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  if (neg) r = -r;
  return r;
}

bool next_combination(std::vector<std::size_t>& sel, std::size_t n) {
  const std::size_t k = sel.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (sel[i] + (k - i) <= n - 1) {
      ++sel[i];
      for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: C(n-k+i, i) accumulates stepwise
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Fraction-free full Gauss-Jordan elimination on a k x (k + extras) table.
// Returns the determinant of the (row-permuted) leading block, 0 when
// singular; on success every extra column holds det * solution.
I128 montante(std::vector<std::vector<I128>>& t, std::size_t k) {
  I128 prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (t[p][p] == 0) {
      std::size_t s = p + 1;
      while (s < k && t[s][p] == 0) ++s;
      if (s == k) return 0;
      std::swap(t[p], t[s]);
    }
    const I128 piv = t[p][p];
    for (std::size_t i = 0; i < k; ++i) {
      if (i == p) continue;
      const I128 f = t[i][p];
      auto& row = t[i];
      const auto& prow = t[p];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j == p) continue;
        row[j] = (piv * row[j] - f * prow[j]) / prev;
      }
      row[p] = 0;
    }
    prev = piv;
  }
  return prev;
}

struct IntData {
  bool usable = false;
  std::size_t m = 0, n = 0;
  std::vector<std::vector<std::int64_t>> a;  // row major
  std::vector<std::int64_t> b, c;
};

IntData to_int_data(const LPInstance& p) {
  IntData d;
  d.m = p.m();
  d.n = p.n();
  double max_entry = 1;
  const auto take = [&](const Rational& r, std::int64_t& slot) {
    if (!is_integer(r)) return false;
    const Int num = numerator_of(r);
    if (num > 1000000000000LL || num < -1000000000000LL) return false;
    slot = num.convert_to<std::int64_t>();
    max_entry = std::max(max_entry, std::abs(static_cast<double>(slot)));
    return true;
  };
  d.a.assign(d.m, std::vector<std::int64_t>(d.n));
  d.b.resize(d.m);
  d.c.resize(d.n);
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t j = 0; j < d.n; ++j)
      if (!take(p.a(i, j), d.a[i][j])) return d;
    if (!take(p.b[i], d.b[i])) return d;
  }
  for (std::size_t j = 0; j < d.n; ++j)
    if (!take(p.c[j], d.c[j])) return d;
  // Hadamard bound: every Montante intermediate is a minor of [a | b | c-ish]
  // columns, so (sqrt(m) * max_entry)^m below 2^60 keeps int128 products safe.
  const double bound =
      std::pow(std::sqrt(static_cast<double>(std::max<std::size_t>(d.m, 1))) * max_entry,
               static_cast<double>(d.m));
  d.usable = bound < 1.15e18;
  return d;
}

int sign_i128(I128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Exact comparison of a/b and c/d with b, d != 0 of arbitrary sign.
int cmp_frac(I128 a, I128 b, I128 c, I128 d) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (d < 0) {
    c = -c;
    d = -d;
  }
  const I128 lhs = a * d;
  const I128 rhs = c * b;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct VertexScan {
  // Per feasible basis: basis, vertex, objective (num/den), and whether an
  // unbounded certificate (rc < 0, updated column <= 0) exists there.
  struct Entry {
    Basis basis;
    RVector vertex;
    Rational objective;
    bool unbounded_certificate = false;
  };
  std::vector<Entry> feasible;
};

VertexScan scan_bases_int(const IntData& d, const LPInstance& p, bool want_certificates) {
  VertexScan scan;
  const std::size_t m = d.m;
  const std::size_t n = d.n;
  std::vector<std::size_t> sel(m);
  for (std::size_t i = 0; i < m; ++i) sel[i] = i;
  if (m > n) return scan;

  std::vector<std::vector<I128>> t;
  do {
    // Stage 1: solve A_B x = b fraction-free.
    t.assign(m, std::vector<I128>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) t[i][k] = d.a[i][sel[k]];
      t[i][m] = d.b[i];
    }
    const I128 det = montante(t, m);
    if (det == 0) continue;
    const int sgn = sign_i128(det);
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i)
      if (sign_i128(t[i][m]) * sgn < 0) feasible = false;
    if (!feasible) continue;

    VertexScan::Entry e;
    e.basis.assign(sel.begin(), sel.end());
    e.vertex.assign(n, make_rational(0));
    const Int det_z = int128_to_mpz(det);
    I128 obj_num = 0;
    for (std::size_t i = 0; i < m; ++i) {
      e.vertex[sel[i]] = make_rational(int128_to_mpz(t[i][m]), det_z);
      obj_num += static_cast<I128>(d.c[sel[i]]) * t[i][m];
    }
    e.objective = make_rational(int128_to_mpz(obj_num), det_z);

    if (want_certificates) {
      // Stage 2: all updated columns in one elimination for reduced costs.
      std::vector<char> basic(n, 0);
      for (std::size_t j : sel) basic[j] = 1;
      std::vector<std::size_t> nonbasic;
      nonbasic.reserve(n - m);
      for (std::size_t j = 0; j < n; ++j)
        if (!basic[j]) nonbasic.push_back(j);
      t.assign(m, std::vector<I128>(m + nonbasic.size()));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) t[i][k] = d.a[i][sel[k]];
        for (std::size_t k = 0; k < nonbasic.size(); ++k) t[i][m + k] = d.a[i][nonbasic[k]];
      }
      const I128 det2 = montante(t, m);
      for (std::size_t k = 0; k < nonbasic.size() && !e.unbounded_certificate; ++k) {
        const std::size_t j = nonbasic[k];
        // rc_j = c_j - c_B^T u_j with u_j = column k scaled by 1/det2.
        I128 cu = 0;
        for (std::size_t i = 0; i < m; ++i) cu += static_cast<I128>(d.c[sel[i]]) * t[i][m + k];
        if (cmp_frac(cu, det2, d.c[j], 1) <= 0) continue;  // rc_j >= 0
        bool nonpositive = true;
        const int sgn2 = sign_i128(det2);
        for (std::size_t i = 0; i < m && nonpositive; ++i)
          if (sign_i128(t[i][m + k]) * sgn2 > 0) nonpositive = false;
        if (nonpositive) e.unbounded_certificate = true;
      }
    }
    scan.feasible.push_back(std::move(e));
  } while (next_combination(sel, n));
  (void)p;
  return scan;
}

VertexScan scan_bases_generic(const LPInstance& p, bool want_certificates) {
  VertexScan scan;
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  if (m > n) return scan;
  std::vector<std::size_t> sel(m);
  for (std::size_t i = 0; i < m; ++i) sel[i] = i;
  do {
    Basis basis(sel.begin(), sel.end());
    RMatrix inv;
    try {
      inv = inverse(p.a.columns(basis));
    } catch (const SingularMatrix&) {
      continue;
    }
    const RVector x_basic = mat_vec(inv, p.b);
    bool feasible = true;
    for (const auto& v : x_basic)
      if (v < 0) {
        feasible = false;
        break;
      }
    if (!feasible) continue;

    VertexScan::Entry e;
    e.basis = basis;
    e.vertex.assign(n, make_rational(0));
    RVector c_basic(m);
    for (std::size_t i = 0; i < m; ++i) {
      e.vertex[sel[i]] = x_basic[i];
      c_basic[i] = p.c[sel[i]];
    }
    e.objective = dot(c_basic, x_basic);

    if (want_certificates) {
      const RVector y = transpose_vec(inv, c_basic);
      std::vector<char> basic(n, 0);
      for (std::size_t j : sel) basic[j] = 1;
      for (std::size_t j = 0; j < n && !e.unbounded_certificate; ++j) {
        if (basic[j]) continue;
        const RVector col = p.a.column(j);
        if (p.c[j] - dot(y, col) >= 0) continue;
        const RVector u = mat_vec(inv, col);
        bool nonpositive = true;
        for (const auto& ui : u)
          if (ui > 0) {
            nonpositive = false;
            break;
          }
        if (nonpositive) e.unbounded_certificate = true;
      }
    }
    scan.feasible.push_back(std::move(e));
  } while (next_combination(sel, n));
  return scan;
}

VertexScan scan_bases(const LPInstance& p, const OracleOptions& options, bool want_certificates) {
  const std::uint64_t combos = binomial_capped(p.n(), p.m(), options.max_bases);
  if (combos > options.max_bases)
    throw TooLarge("basis enumeration needs more than the configured budget");
  if (options.allow_int_fast_path) {
    const IntData d = to_int_data(p);
    if (d.usable) return scan_bases_int(d, p, want_certificates);
  }
  return scan_bases_generic(p, want_certificates);
}

// Minimum of the artificial objective over all bases of [A~ | I], where A~
// has rows flipped so b >= 0. Zero means the original system is feasible.
Rational artificial_minimum(const LPInstance& p, const OracleOptions& options) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  LPInstance ext;
  ext.a = RMatrix(m, n + m);
  ext.b.resize(m);
  ext.c.assign(n + m, make_rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = p.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) ext.a(i, j) = flip ? -p.a(i, j) : p.a(i, j);
    ext.a(i, n + i) = 1;
    ext.b[i] = flip ? -p.b[i] : p.b[i];
    ext.c[n + i] = 1;
  }
  const VertexScan scan = scan_bases(ext, options, false);
  if (scan.feasible.empty())
    throw std::logic_error("artificial system must always have a feasible basis");
  Rational best = scan.feasible.front().objective;
  for (const auto& e : scan.feasible) best = std::min(best, e.objective);
  return best;
}

}  // namespace

OracleResult enumerate_solve(const LPInstance& p, const OracleOptions& options) {
  OracleResult out;
  const VertexScan scan = scan_bases(p, options, true);

  if (scan.feasible.empty()) {
    if (artificial_minimum(p, options) <= 0)
      throw std::logic_error("feasible system without a feasible basis: input not full row rank?");
    out.status = LpStatus::Infeasible;
    return out;
  }

  for (const auto& e : scan.feasible) {
    if (e.unbounded_certificate) {
      out.status = LpStatus::Unbounded;
      return out;
    }
  }

  const Rational* best = nullptr;
  for (const auto& e : scan.feasible)
    if (!best || e.objective < *best) best = &e.objective;

  std::vector<const VertexScan::Entry*> optimal;
  for (const auto& e : scan.feasible)
    if (e.objective == *best) optimal.push_back(&e);

  out.status = LpStatus::Optimal;
  out.objective = *best;
  out.solution = optimal.front()->vertex;
  std::vector<const RVector*> distinct;
  for (const auto* e : optimal) {
    out.optimal_bases.push_back(e->basis);
    bool seen = false;
    for (const auto* v : distinct)
      if (*v == e->vertex) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(&e->vertex);
  }
  out.unique = distinct.size() == 1;
  return out;
}

std::vector<std::pair<Basis, RVector>> enumerate_feasible_vertices(const LPInstance& p,
                                                                   const OracleOptions& options) {
  const VertexScan scan = scan_bases(p, options, false);
  std::vector<std::pair<Basis, RVector>> out;
  out.reserve(scan.feasible.size());
  for (const auto& e : scan.feasible) out.emplace_back(e.basis, e.vertex);
  return out;
}

bool proximity_check(const RVector& x_double_prime, const RVector& x_star_reduced,
                     const ScaleFactor& k, std::size_t n_prime) {
  if (x_double_prime.size() != x_star_reduced.size())
    throw DimensionMismatch("proximity check on vectors of different lengths");
  if (k.k_squared <= 0) throw std::domain_error("scale factor must be positive");
  const Rational bound = make_rational(static_cast<long long>(n_prime));
  for (std::size_t i = 0; i < x_double_prime.size(); ++i) {
    // |x''_i * k - x*_i| < n' * k, both sides affine in sqrt(k^2).
    if (compare_affine_sqrt(x_star_reduced[i], bound - x_double_prime[i], k.k_squared) <= 0)
      return false;
    if (compare_affine_sqrt(-x_star_reduced[i], bound + x_double_prime[i], k.k_squared) <= 0)
      return false;
  }
  return true;
}

}  // namespace tardos
