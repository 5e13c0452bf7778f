#pragma once

#include "tardos/simplex.hpp"

#include <optional>

namespace tardos {

/// Variable-elimination data for a fixed index set K̄: the problem over the
/// remaining columns plus the lifting map back to the original space.
struct ReducedProblem {
  RMatrix a_prime;   // h2 * A_K
  RVector b_prime;   // h2 * b
  RVector c_prime;   // c_K - (h1 A_K)^T c_fixed
  RMatrix h1;        // first |fixed| rows of G^{-1}
  RMatrix h1_a_k;    // h1 * A_K
  std::vector<std::size_t> col_map;  // reduced column -> original column (ascending)
  std::vector<std::size_t> fixed;    // K̄ in the order used for G's leading columns

  std::size_t m_prime() const { return a_prime.rows(); }
  std::size_t n_prime() const { return a_prime.cols(); }
};

/// Scaling constant of the rounded subproblem, held exactly as its square.
struct ScaleFactor {
  Rational k_squared;  // > 0
};

enum class SolveStatus { Optimal, Infeasible, NoOptimalSolution };
const char* to_string(SolveStatus s);

struct IterationReport {
  std::size_t iteration = 0;  // 1-based
  std::size_t m_prime = 0, n_prime = 0;
  bool zero_rhs = false;
  bool warm_started = false;
  Basis basis_l;                              // original indices of L
  std::optional<ScaleFactor> scale;
  std::vector<Int> rounded_rhs;
  std::optional<RVector> x_double_prime;      // optimal rounded solution, reduced coordinates
  std::optional<Basis> basis_l_double_prime;  // original indices of L''
  std::vector<std::size_t> j_set;             // original indices with reduced coordinate >= n'
  bool j_applied = false;                     // true when this J was merged into K̄
  std::uint64_t degenerate_pivots_seen = 0;
  std::optional<LpStatus> aux_status;         // outcome of this iteration's auxiliary solve

  // Artifacts kept for verification.
  ReducedProblem reduced;
  std::optional<LPInstance> rounded_lp;       // columns ordered L then L-bar
  std::vector<std::size_t> rounded_cols;      // rounded column -> reduced column
  SimplexStats stats;                         // simplex work of this iteration
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<RVector> solution;
  std::optional<Basis> basis;
  std::vector<IterationReport> trace;

  std::size_t outer_iterations = 0;
  std::size_t auxiliary_problems = 0;  // two per two-phase call
  SimplexStats total_stats;
};

struct SolveOptions {
  bool warm_start = true;
  bool trace = true;  // keep per-iteration artifacts in the outcome
};

/// Raised when an optimal rounded solution selects no index, which the
/// norm lower bound on rounded optima rules out; indicates a solver bug.
struct EmptyJ : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised when a state the algorithm's invariants exclude is reached.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Eliminates the variables in k_bar: G is built by extend_to_basis with
/// k_bar first, its inverse split into h1/h2, and the problem rewritten over
/// the remaining columns. k_bar empty returns the instance unchanged.
ReducedProblem reduce_problem(const LPInstance& p, const std::vector<std::size_t>& k_bar);

/// k^2 = ||min_norm_point(a', b')||^2 / (m' + n'^2)^2, or nullopt when the
/// minimum-norm point is zero (equivalently b' = 0).
std::optional<ScaleFactor> compute_scaling_factor(const ReducedProblem& r);

/// The rounded problem over basis l (reduced column positions): coefficient
/// matrix [I, (A'_L)^{-1} A'_Lbar] with columns ordered L then L-bar, right
/// hand side ceil((A'_L)^{-1} b' / k) entrywise.
LPInstance build_rounded_problem(const ReducedProblem& r, const std::vector<std::size_t>& l,
                                 const ScaleFactor& k);

/// Original-problem indices whose reduced coordinate is >= n'.
std::vector<std::size_t> select_large_indices(const RVector& x_reduced,
                                              const std::vector<std::size_t>& col_map,
                                              std::size_t n_prime);

struct BasisCertificate {
  bool optimal = false;
  RVector primal;  // full-length solution when optimal
  RVector dual;    // y with reduced costs c_j - y^T a_j >= 0 when optimal
};

/// True iff a_B is nonsingular, the basic solution is nonnegative, and all
/// reduced costs are nonnegative; certificate returned when true.
BasisCertificate check_optimal_basis(const LPInstance& p, const Basis& b);

/// The full fixing loop: reduce, scale, round, solve the rounded problem,
/// test the candidate basis, and fix the large coordinates, for at most m
/// rounds. Requires a rank-reduced instance (run full_row_rank_reduce first;
/// an inconsistent system is Infeasible outright).
SolveOutcome solve(const LPInstance& p, const SolveOptions& options = {});

}  // namespace tardos
