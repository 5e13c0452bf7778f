#pragma once

#include "tardos/solver.hpp"

namespace tardos {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Basis> optimal_bases;  // every feasible basis attaining the optimum
  bool unique = false;               // exactly one optimal vertex
  std::optional<RVector> solution;   // vertex of the first optimal basis
  std::optional<Rational> objective;
};

struct OracleOptions {
  std::uint64_t max_bases = 1'000'000;   // guard on the enumeration size
  bool allow_int_fast_path = true;       // exact int128 kernel when data permits
};

/// Ground truth by enumerating every m-subset of columns: records all feasible
/// basic solutions, declares Unbounded when some feasible basis carries a
/// negative reduced cost with nonpositive updated column, and confirms
/// infeasibility through the artificial (phase-one style) enumeration.
/// Expects a full-row-rank instance; throws TooLarge past the guard.
OracleResult enumerate_solve(const LPInstance& p, const OracleOptions& options = {});

/// All feasible basic solutions (basis, full vertex vector), enumeration order.
std::vector<std::pair<Basis, RVector>> enumerate_feasible_vertices(
    const LPInstance& p, const OracleOptions& options = {});

/// Exact check of max_i |x''_i - x*_i / k| < n' with k = sqrt(k_squared):
/// both sides are affine in sqrt(k_squared) and compared by sign analysis.
bool proximity_check(const RVector& x_double_prime, const RVector& x_star_reduced,
                     const ScaleFactor& k, std::size_t n_prime);

}  // namespace tardos
