#pragma once

#include "tardos/lp_model.hpp"

#include <functional>
#include <optional>

namespace tardos {

enum class LpStatus { Optimal, Infeasible, Unbounded };
const char* to_string(LpStatus s);

/// Ordered basic column index set; the instance restricted to it is
/// nonsingular.
using Basis = std::vector<std::size_t>;

struct SimplexStats {
  std::uint64_t pivots = 0;
  std::uint64_t distinct_bfs = 0;       // distinct points visited, not bases
  std::uint64_t degenerate_pivots = 0;  // pivots = degenerate + (distinct_bfs - 1) per run
  std::optional<Rational> max_positive_entry;  // over all visited BFS entries > 0
  std::optional<Rational> min_positive_entry;

  void observe_positive(const Rational& v);
  void merge(const SimplexStats& other);
};

struct SimplexOutcome {
  LpStatus status = LpStatus::Optimal;
  std::optional<RVector> solution;
  std::optional<Basis> basis;
  std::optional<RVector> ray;  // unbounded certificate: a r = 0, r >= 0, c^T r < 0
  SimplexStats stats;
};

struct InfeasibleStart : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimplexCallbacks {
  // Invoked with the full solution vector of the problem being pivoted at
  // every visited basis (for phase one that is the artificial extension).
  std::function<void(const RVector&)> on_bfs;
};

/// Primal simplex with Dantzig's rule from a primal feasible basis.
/// Entering variable: most negative reduced cost, ties broken by smallest
/// column index. Leaving variable: lexicographic ratio test, which keeps the
/// rows of [x_B | (A_B)^{-1} A_B0] lexicographically positive and therefore
/// terminates without repeating a basis even under degeneracy.
SimplexOutcome optimize(const LPInstance& p, const Basis& start, const SimplexCallbacks& cb = {});

/// Feasibility via min 1^T a over a x (+/-) a = b with rows sign-normalized
/// so b >= 0. Returns Infeasible when the auxiliary optimum is positive,
/// otherwise a feasible basis of p with the artificials driven out (rank
/// deficiency is a caller bug; reduce rows first).
SimplexOutcome phase_one(const LPInstance& p, const SimplexCallbacks& cb = {});

/// phase_one then optimize; stats are summed over both phases.
SimplexOutcome solve_two_phase(const LPInstance& p, const SimplexCallbacks& cb = {});

}  // namespace tardos
