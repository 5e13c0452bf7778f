#pragma once

#include "tardos/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tardos {

/// Standard-form problem: minimize c^T x subject to a x = b, x >= 0.
struct LPInstance {
  RMatrix a;
  RVector b;
  RVector c;
  std::string name;

  std::size_t m() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line;
  std::size_t column;
};

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance file format (UTF-8, `#` starts a comment, whitespace separated):
///   line 1: `m n`
///   line 2: `c:` followed by n rational literals
///   line 3: `b:` followed by m rational literals
///   next m lines: rows of the coefficient matrix, n literals each.
/// A leading `# name: <label>` comment carries the instance name.
LPInstance parse_instance(std::string_view text);
std::string serialize_instance(const LPInstance& p);

struct TUWitness {
  std::vector<std::size_t> row_idx;
  std::vector<std::size_t> col_idx;
  Rational det;
};

struct TUReport {
  bool is_tu = false;
  std::optional<TUWitness> witness;  // a square submatrix with det outside {-1, 0, 1}
  std::size_t max_order_checked = 0;
};

/// Exhaustive subdeterminant enumeration up to max_order (clamped to
/// min(m, n)); certification of total unimodularity needs the full order.
/// Throws SizeLimitExceeded when more than det_budget determinants would be
/// evaluated.
TUReport is_totally_unimodular(const RMatrix& a, std::size_t max_order,
                               std::uint64_t det_budget = 10'000'000);

struct FlowGenParams {
  std::size_t nodes = 4;
  std::size_t arcs = 6;
  std::uint64_t seed = 1;
  std::int64_t cost_min = -5, cost_max = 5;
  std::int64_t supply_min = -5, supply_max = 5;
};

/// Uncapacitated min-cost-flow LP on a random connected digraph: the
/// coefficient matrix is the node-arc incidence matrix with the last node's
/// row dropped, b holds the node supplies (summing to zero before the drop),
/// c the arc costs. Deterministic in the seed.
LPInstance gen_mincost_flow(const FlowGenParams& params);

struct IntervalGenParams {
  std::size_t rows = 3;
  std::size_t cols = 4;
  std::uint64_t seed = 1;
  std::int64_t b_min = -5, b_max = 5;
  std::int64_t c_min = -5, c_max = 5;
};

/// Each coefficient row is a 0/1 vector with consecutive ones; b and c are
/// random integers in the configured ranges. Deterministic in the seed.
LPInstance gen_interval_matrix_lp(const IntervalGenParams& params);

}  // namespace tardos
