#include "tardos/simplex.hpp"

#include <algorithm>

namespace tardos {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

void SimplexStats::observe_positive(const Rational& v) {
  if (!max_positive_entry || v > *max_positive_entry) max_positive_entry = v;
  if (!min_positive_entry || v < *min_positive_entry) min_positive_entry = v;
}

void SimplexStats::merge(const SimplexStats& other) {
  pivots += other.pivots;
  distinct_bfs += other.distinct_bfs;
  degenerate_pivots += other.degenerate_pivots;
  if (other.max_positive_entry) observe_positive(*other.max_positive_entry);
  if (other.min_positive_entry) observe_positive(*other.min_positive_entry);
}

namespace {

RVector full_vector(std::size_t n, const Basis& basis, const RVector& x_basic) {
  RVector x(n, make_rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) x[basis[i]] = x_basic[i];
  return x;
}

constexpr std::uint64_t kPivotCap = 10'000'000;

}  // namespace

SimplexOutcome optimize(const LPInstance& p, const Basis& start, const SimplexCallbacks& cb) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  if (start.size() != m) throw InfeasibleStart("start basis has wrong size");

  Basis basis = start;
  std::vector<char> is_basic(n, 0);
  for (std::size_t j : basis) {
    if (j >= n || is_basic[j]) throw InfeasibleStart("start basis has invalid indices");
    is_basic[j] = 1;
  }

  const RMatrix ref_cols = p.a.columns(basis);  // lex reference block B0
  SimplexOutcome out;
  bool first_visit = true;

  while (true) {
    RMatrix inv;
    try {
      inv = inverse(p.a.columns(basis));
    } catch (const SingularMatrix&) {
      if (first_visit) throw InfeasibleStart("start basis is singular");
      throw std::logic_error("simplex pivot produced a singular basis");
    }
    const RVector x_basic = mat_vec(inv, p.b);
    for (const auto& v : x_basic) {
      if (v < 0) {
        if (first_visit) throw InfeasibleStart("start basis is primal infeasible");
        throw std::logic_error("simplex lost primal feasibility");
      }
    }
    if (first_visit) {
      out.stats.distinct_bfs = 1;
      first_visit = false;
    }
    for (const auto& v : x_basic)
      if (v > 0) out.stats.observe_positive(v);
    if (cb.on_bfs) cb.on_bfs(full_vector(n, basis, x_basic));

    // Dantzig entering rule: most negative reduced cost, smallest index wins ties.
    RVector c_basic(m);
    for (std::size_t i = 0; i < m; ++i) c_basic[i] = p.c[basis[i]];
    const RVector y = transpose_vec(inv, c_basic);
    std::size_t entering = n;
    Rational best_rc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_basic[j]) continue;
      const Rational rc = p.c[j] - dot(y, p.a.column(j));
      if (rc < best_rc) {
        best_rc = rc;
        entering = j;
      }
    }
    if (entering == n) {
      out.status = LpStatus::Optimal;
      out.solution = full_vector(n, basis, x_basic);
      out.basis = basis;
      return out;
    }

    const RVector u = mat_vec(inv, p.a.column(entering));
    bool bounded = false;
    for (const auto& ui : u)
      if (ui > 0) bounded = true;
    if (!bounded) {
      RVector ray(n, make_rational(0));
      ray[entering] = 1;
      for (std::size_t i = 0; i < m; ++i) ray[basis[i]] = -u[i];
      out.status = LpStatus::Unbounded;
      out.basis = basis;
      out.ray = std::move(ray);
      return out;
    }

    // Lexicographic ratio test over the rows of [x_B | inv * A_B0].
    const RMatrix lex_block = mat_mul(inv, ref_cols);
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      int cmp = 0;  // row i / u_i  vs  row leave / u_leave
      {
        const Rational lhs = x_basic[i] * u[leave];
        const Rational rhs = x_basic[leave] * u[i];
        if (lhs != rhs) cmp = lhs < rhs ? -1 : 1;
      }
      for (std::size_t k = 0; k < m && cmp == 0; ++k) {
        const Rational lhs = lex_block(i, k) * u[leave];
        const Rational rhs = lex_block(leave, k) * u[i];
        if (lhs != rhs) cmp = lhs < rhs ? -1 : 1;
      }
      if (cmp == 0) throw std::logic_error("lexicographic ratio test tie");
      if (cmp < 0) leave = i;
    }

    const bool moved = x_basic[leave] > 0;
    is_basic[basis[leave]] = 0;
    is_basic[entering] = 1;
    basis[leave] = entering;
    ++out.stats.pivots;
    if (moved)
      ++out.stats.distinct_bfs;
    else
      ++out.stats.degenerate_pivots;
    if (out.stats.pivots > kPivotCap) throw std::logic_error("pivot cap exceeded");
  }
}

SimplexOutcome phase_one(const LPInstance& p, const SimplexCallbacks& cb) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();

  LPInstance ext;
  ext.name = p.name;
  ext.a = RMatrix(m, n + m);
  ext.b.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = p.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) ext.a(i, j) = flip ? -p.a(i, j) : p.a(i, j);
    ext.a(i, n + i) = 1;
    ext.b[i] = flip ? -p.b[i] : p.b[i];
  }
  ext.c.assign(n + m, make_rational(0));
  for (std::size_t i = 0; i < m; ++i) ext.c[n + i] = 1;

  Basis start(m);
  for (std::size_t i = 0; i < m; ++i) start[i] = n + i;

  SimplexOutcome aux = optimize(ext, start, cb);
  if (aux.status != LpStatus::Optimal)
    throw std::logic_error("phase one auxiliary problem must have an optimum");

  if (dot(ext.c, *aux.solution) > 0) {
    SimplexOutcome out;
    out.status = LpStatus::Infeasible;
    out.stats = aux.stats;
    return out;
  }

  // Drive any zero-valued artificials out of the basis. A row where no
  // original column can enter would mean the row is redundant, which the
  // rank-reduction precondition excludes.
  Basis basis = *aux.basis;
  std::vector<char> is_basic(n + m, 0);
  for (std::size_t j : basis) is_basic[j] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    const RMatrix inv = inverse(ext.a.columns(basis));
    std::size_t replacement = n;
    for (std::size_t j = 0; j < n && replacement == n; ++j) {
      if (is_basic[j]) continue;
      if (dot(inv.row(i), ext.a.column(j)) != 0) replacement = j;
    }
    if (replacement == n)
      throw std::logic_error("cannot drive artificial out: coefficient rows are dependent");
    is_basic[basis[i]] = 0;
    is_basic[replacement] = 1;
    basis[i] = replacement;
    ++aux.stats.pivots;
    ++aux.stats.degenerate_pivots;
  }

  SimplexOutcome out;
  out.status = LpStatus::Optimal;
  out.basis = basis;
  out.solution = RVector(aux.solution->begin(), aux.solution->begin() + n);
  out.stats = aux.stats;
  return out;
}

SimplexOutcome solve_two_phase(const LPInstance& p, const SimplexCallbacks& cb) {
  SimplexOutcome first = phase_one(p, cb);
  if (first.status == LpStatus::Infeasible) return first;
  SimplexOutcome second = optimize(p, *first.basis, cb);
  second.stats.merge(first.stats);
  return second;
}

}  // namespace tardos
