#include "tardos/solver.hpp"

#include <algorithm>
#include <numeric>

namespace tardos {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::NoOptimalSolution: return "NoOptimalSolution";
  }
  return "?";
}

ReducedProblem reduce_problem(const LPInstance& p, const std::vector<std::size_t>& k_bar) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  ReducedProblem r;
  r.fixed = k_bar;
  if (k_bar.empty()) {
    r.a_prime = p.a;
    r.b_prime = p.b;
    r.c_prime = p.c;
    r.h1 = RMatrix(0, m);
    r.h1_a_k = RMatrix(0, n);
    r.col_map.resize(n);
    std::iota(r.col_map.begin(), r.col_map.end(), std::size_t{0});
    return r;
  }

  const std::vector<std::size_t> g_cols = extend_to_basis(p.a, k_bar);
  const RMatrix h = inverse(p.a.columns(g_cols));
  const std::size_t f = k_bar.size();
  std::vector<std::size_t> top(f), bottom(m - f);
  std::iota(top.begin(), top.end(), std::size_t{0});
  std::iota(bottom.begin(), bottom.end(), f);
  r.h1 = h.select_rows(top);
  const RMatrix h2 = h.select_rows(bottom);

  std::vector<char> is_fixed(n, 0);
  for (std::size_t j : k_bar) is_fixed[j] = 1;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_fixed[j]) r.col_map.push_back(j);

  const RMatrix a_k = p.a.columns(r.col_map);
  r.a_prime = mat_mul(h2, a_k);
  r.b_prime = mat_vec(h2, p.b);
  r.h1_a_k = mat_mul(r.h1, a_k);

  RVector c_fixed(f);
  for (std::size_t i = 0; i < f; ++i) c_fixed[i] = p.c[k_bar[i]];
  const RVector shift = transpose_vec(r.h1_a_k, c_fixed);
  r.c_prime.resize(r.col_map.size());
  for (std::size_t t = 0; t < r.col_map.size(); ++t)
    r.c_prime[t] = p.c[r.col_map[t]] - shift[t];
  return r;
}

std::optional<ScaleFactor> compute_scaling_factor(const ReducedProblem& r) {
  const RVector y = min_norm_point(r.a_prime, r.b_prime);
  bool zero = true;
  for (const auto& v : y)
    if (v != 0) {
      zero = false;
      break;
    }
  if (zero) return std::nullopt;
  const Rational denom =
      make_rational(static_cast<long long>(r.m_prime()) +
                    static_cast<long long>(r.n_prime()) * static_cast<long long>(r.n_prime()));
  return ScaleFactor{dot(y, y) / (denom * denom)};
}

namespace {

std::vector<std::size_t> with_complement(const std::vector<std::size_t>& l, std::size_t n_prime) {
  std::vector<char> in_l(n_prime, 0);
  for (std::size_t t : l) in_l[t] = 1;
  std::vector<std::size_t> order = l;
  for (std::size_t t = 0; t < n_prime; ++t)
    if (!in_l[t]) order.push_back(t);
  return order;
}

}  // namespace

LPInstance build_rounded_problem(const ReducedProblem& r, const std::vector<std::size_t>& l,
                                 const ScaleFactor& k) {
  const std::size_t mp = r.m_prime();
  const std::size_t np = r.n_prime();
  if (l.size() != mp) throw DimensionMismatch("rounded problem basis has wrong size");
  if (k.k_squared <= 0) throw std::domain_error("scale factor must be positive");

  const RMatrix a_l = r.a_prime.columns(l);
  const RVector v = solve_square(a_l, r.b_prime);

  const std::vector<std::size_t> order = with_complement(l, np);
  std::vector<std::size_t> lbar(order.begin() + static_cast<std::ptrdiff_t>(mp), order.end());

  LPInstance q;
  q.a = RMatrix(mp, np);
  for (std::size_t i = 0; i < mp; ++i) q.a(i, i) = 1;
  if (!lbar.empty()) {
    const RMatrix w = solve_square_multi(a_l, r.a_prime.columns(lbar));
    for (std::size_t i = 0; i < mp; ++i)
      for (std::size_t j = 0; j < lbar.size(); ++j) q.a(i, mp + j) = w(i, j);
  }
  q.b.reserve(mp);
  for (const auto& vi : v) q.b.push_back(make_rational(ceil_div_by_sqrt(vi, k.k_squared), Int(1)));
  q.c.resize(np);
  for (std::size_t t = 0; t < np; ++t) q.c[t] = r.c_prime[order[t]];
  return q;
}

std::vector<std::size_t> select_large_indices(const RVector& x_reduced,
                                              const std::vector<std::size_t>& col_map,
                                              std::size_t n_prime) {
  if (x_reduced.size() != col_map.size())
    throw DimensionMismatch("reduced solution and column map sizes differ");
  const Rational threshold = make_rational(static_cast<long long>(n_prime));
  std::vector<std::size_t> j_set;
  for (std::size_t t = 0; t < x_reduced.size(); ++t)
    if (x_reduced[t] >= threshold) j_set.push_back(col_map[t]);
  if (j_set.empty())
    throw EmptyJ("optimal rounded solution has no coordinate >= n'");
  return j_set;
}

BasisCertificate check_optimal_basis(const LPInstance& p, const Basis& b) {
  BasisCertificate cert;
  if (b.size() != p.m()) return cert;
  std::vector<char> is_basic(p.n(), 0);
  for (std::size_t j : b) {
    if (j >= p.n() || is_basic[j]) return cert;
    is_basic[j] = 1;
  }
  RMatrix inv;
  try {
    inv = inverse(p.a.columns(b));
  } catch (const SingularMatrix&) {
    return cert;
  }
  const RVector x_basic = mat_vec(inv, p.b);
  for (const auto& v : x_basic)
    if (v < 0) return cert;
  RVector c_basic(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c_basic[i] = p.c[b[i]];
  const RVector y = transpose_vec(inv, c_basic);
  for (std::size_t j = 0; j < p.n(); ++j) {
    if (is_basic[j]) continue;
    if (p.c[j] - dot(y, p.a.column(j)) < 0) return cert;
  }
  cert.optimal = true;
  cert.primal.assign(p.n(), make_rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) cert.primal[b[i]] = x_basic[i];
  cert.dual = y;
  return cert;
}

SolveOutcome solve(const LPInstance& p, const SolveOptions& options) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  SolveOutcome out;
  std::vector<std::size_t> k_bar;
  std::vector<std::size_t> warm_cols;  // previous L'' \ J, original indices

  const auto record = [&](IterationReport&& rep) {
    if (options.trace) out.trace.push_back(std::move(rep));
  };

  for (std::size_t iter = 1;; ++iter) {
    if (iter > std::max<std::size_t>(m, 1))
      throw InvariantViolation("outer iteration count exceeded the row count");
    out.outer_iterations = iter;

    ReducedProblem red = reduce_problem(p, k_bar);
    const std::size_t mp = red.m_prime();
    const std::size_t np = red.n_prime();

    IterationReport rep;
    rep.iteration = iter;
    rep.m_prime = mp;
    rep.n_prime = np;

    const auto scale = compute_scaling_factor(red);
    if (!scale) {
      // b' = 0: the reduced problem is solved directly from the origin, the
      // only vertex it can have; the outcome is optimality of 0 or an
      // unbounded ray.
      rep.zero_rhs = true;
      const LPInstance reduced_lp{red.a_prime, red.b_prime, red.c_prime, p.name};
      const SimplexOutcome aux = solve_two_phase(reduced_lp);
      out.auxiliary_problems += 2;
      out.total_stats.merge(aux.stats);
      rep.stats = aux.stats;
      rep.degenerate_pivots_seen = aux.stats.degenerate_pivots;
      rep.aux_status = aux.status;
      if (aux.status == LpStatus::Infeasible)
        throw InvariantViolation("zero-rhs reduced problem must be feasible at the origin");
      if (aux.status == LpStatus::Unbounded) {
        if (options.trace) rep.reduced = std::move(red);
        record(std::move(rep));
        out.status = SolveStatus::NoOptimalSolution;
        return out;
      }
      for (const auto& v : *aux.solution)
        if (v != 0) throw InvariantViolation("zero-rhs reduced optimum must be the origin");
      Basis cand = k_bar;
      for (std::size_t pos : *aux.basis) cand.push_back(red.col_map[pos]);
      const BasisCertificate cert = check_optimal_basis(p, cand);
      if (!cert.optimal)
        throw InvariantViolation("lifted zero-rhs optimum failed the optimality test");
      if (options.trace) rep.reduced = std::move(red);
      record(std::move(rep));
      out.status = SolveStatus::Optimal;
      out.solution = cert.primal;
      out.basis = std::move(cand);
      return out;
    }
    rep.scale = *scale;

    // Basis L: reuse the previous L'' \ J when it still spans, else greedy.
    std::vector<std::size_t> l;
    if (options.warm_start && !warm_cols.empty() && warm_cols.size() == mp) {
      std::vector<std::size_t> translated;
      translated.reserve(mp);
      for (std::size_t j : warm_cols) {
        const auto it = std::lower_bound(red.col_map.begin(), red.col_map.end(), j);
        if (it == red.col_map.end() || *it != j) break;
        translated.push_back(static_cast<std::size_t>(it - red.col_map.begin()));
      }
      if (translated.size() == mp) {
        try {
          (void)inverse(red.a_prime.columns(translated));
          l = std::move(translated);
          rep.warm_started = true;
        } catch (const SingularMatrix&) {
        }
      }
    }
    if (l.empty() && mp > 0) l = extend_to_basis(red.a_prime, {});

    rep.basis_l.reserve(mp);
    for (std::size_t t : l) rep.basis_l.push_back(red.col_map[t]);

    LPInstance rounded = build_rounded_problem(red, l, *scale);
    rounded.name = p.name;
    const std::vector<std::size_t> order = with_complement(l, np);
    rep.rounded_cols = order;
    rep.rounded_rhs.reserve(mp);
    for (const auto& v : rounded.b) rep.rounded_rhs.push_back(numerator_of(v));

    const SimplexOutcome aux = solve_two_phase(rounded);
    out.auxiliary_problems += 2;
    out.total_stats.merge(aux.stats);
    rep.stats = aux.stats;
    rep.degenerate_pivots_seen = aux.stats.degenerate_pivots;
    rep.aux_status = aux.status;

    if (aux.status == LpStatus::Infeasible) {
      if (options.trace) {
        rep.reduced = std::move(red);
        rep.rounded_lp = std::move(rounded);
      }
      record(std::move(rep));
      out.status = SolveStatus::Infeasible;
      return out;
    }
    if (aux.status == LpStatus::Unbounded) {
      if (options.trace) {
        rep.reduced = std::move(red);
        rep.rounded_lp = std::move(rounded);
      }
      record(std::move(rep));
      out.status = SolveStatus::NoOptimalSolution;
      return out;
    }

    RVector x_reduced(np);
    for (std::size_t t = 0; t < np; ++t) x_reduced[order[t]] = (*aux.solution)[t];
    rep.x_double_prime = x_reduced;

    Basis l_dd_orig;
    l_dd_orig.reserve(mp);
    for (std::size_t pos : *aux.basis) l_dd_orig.push_back(red.col_map[order[pos]]);
    rep.basis_l_double_prime = l_dd_orig;

    Basis cand = k_bar;
    cand.insert(cand.end(), l_dd_orig.begin(), l_dd_orig.end());
    const BasisCertificate cert = check_optimal_basis(p, cand);
    if (cert.optimal) {
      if (options.trace) {
        rep.reduced = std::move(red);
        rep.rounded_lp = std::move(rounded);
      }
      record(std::move(rep));
      out.status = SolveStatus::Optimal;
      out.solution = cert.primal;
      out.basis = std::move(cand);
      return out;
    }

    const std::vector<std::size_t> j_set = select_large_indices(x_reduced, red.col_map, np);
    rep.j_set = j_set;
    rep.j_applied = true;

    warm_cols.clear();
    for (std::size_t idx : l_dd_orig)
      if (!std::binary_search(j_set.begin(), j_set.end(), idx)) warm_cols.push_back(idx);

    k_bar.insert(k_bar.end(), j_set.begin(), j_set.end());
    if (options.trace) {
      rep.reduced = std::move(red);
      rep.rounded_lp = std::move(rounded);
    }
    record(std::move(rep));

    if (k_bar.size() > m) throw InvariantViolation("fixed more than m indices");
    if (k_bar.size() == m) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
  }
}

}  // namespace tardos
