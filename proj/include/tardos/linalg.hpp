#pragma once

#include "tardos/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace tardos {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DependentFixedColumns : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RVector = std::vector<Rational>;

/// Dense row-major matrix of canonical rationals.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static RMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RMatrix transpose() const;
  /// Submatrix made of the given columns, in the given order.
  RMatrix columns(const std::vector<std::size_t>& idx) const;
  /// Submatrix made of the given rows, in the given order.
  RMatrix select_rows(const std::vector<std::size_t>& idx) const;
  RVector column(std::size_t j) const;
  RVector row(std::size_t i) const;

  bool operator==(const RMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

RVector mat_vec(const RMatrix& m, const RVector& x);
RVector transpose_vec(const RMatrix& m, const RVector& y);  // m^T * y
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
Rational dot(const RVector& a, const RVector& b);

/// Unique x with m*x = rhs via exact Gaussian elimination; the pivot in each
/// column is the first nonzero entry on or below the diagonal.
/// Throws SingularMatrix when no nonzero pivot exists.
RVector solve_square(const RMatrix& m, const RVector& rhs);

/// Same elimination run once for many right-hand sides (columns of rhs).
RMatrix solve_square_multi(const RMatrix& m, const RMatrix& rhs);

RMatrix inverse(const RMatrix& m);

Rational determinant(const RMatrix& m);

/// a^T (a a^T)^{-1} g: the minimum l2-norm solution of a*x = g.
/// Requires full row rank; throws SingularMatrix when a*a^T is singular.
RVector min_norm_point(const RMatrix& a, const RVector& g);

/// Ordered column index set of size rows(a) starting with `fixed`, extended
/// greedily by the smallest-index columns that increase the rank. Throws
/// DependentFixedColumns / RankDeficient.
std::vector<std::size_t> extend_to_basis(const RMatrix& a, const std::vector<std::size_t>& fixed);

struct RankReduced {
  bool consistent = true;
  RMatrix a;
  RVector b;
  std::vector<std::size_t> kept_rows;  // original row indices, ascending
};

/// Drops redundant rows of (a, b) so the result has full row rank and the
/// same solution set. consistent = false when a dropped row contradicts the
/// kept ones (the system forces 0 = nonzero).
RankReduced full_row_rank_reduce(const RMatrix& a, const RVector& b);

}  // namespace tardos
