#include "tardos/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tardos {

RMatrix::RMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged initializer rows");
    for (long long v : r) data_.push_back(make_rational(v));
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RMatrix RMatrix::columns(const std::vector<std::size_t>& idx) const {
  RMatrix s(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw DimensionMismatch("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) s(i, j) = (*this)(i, idx[j]);
  }
  return s;
}

RMatrix RMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  RMatrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw DimensionMismatch("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
  }
  return s;
}

RVector RMatrix::column(std::size_t j) const {
  RVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RVector RMatrix::row(std::size_t i) const {
  RVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

RVector mat_vec(const RMatrix& m, const RVector& x) {
  if (x.size() != m.cols()) throw DimensionMismatch("mat_vec shape");
  RVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

RVector transpose_vec(const RMatrix& m, const RVector& y) {
  if (y.size() != m.rows()) throw DimensionMismatch("transpose_vec shape");
  RVector x(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, j) * y[i];
    x[j] = acc;
  }
  return x;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul shape");
  RMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot shape");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RMatrix solve_square_multi(const RMatrix& m, const RMatrix& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.rows() != n) throw DimensionMismatch("solve_square shape");
  const std::size_t w = rhs.cols();

  // Augmented elimination [m | rhs].
  RMatrix work(n, n + w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
    for (std::size_t j = 0; j < w; ++j) work(i, n + j) = rhs(i, j);
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("no nonzero pivot in column");
    if (pivot != k)
      for (std::size_t j = k; j < n + w; ++j) std::swap(work(k, j), work(pivot, j));
    const Rational inv_p = 1 / work(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work(i, k) == 0) continue;
      const Rational f = work(i, k) * inv_p;
      work(i, k) = 0;
      for (std::size_t j = k + 1; j < n + w; ++j) work(i, j) -= f * work(k, j);
    }
  }

  RMatrix x(n, w);
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc = work(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j) acc -= work(i, j) * x(j, c);
      x(i, c) = acc / work(i, i);
    }
  }
  return x;
}

RVector solve_square(const RMatrix& m, const RVector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve_square rhs size");
  RMatrix r(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) r(i, 0) = rhs[i];
  const RMatrix x = solve_square_multi(m, r);
  return x.column(0);
}

RMatrix inverse(const RMatrix& m) { return solve_square_multi(m, RMatrix::identity(m.rows())); }

Rational determinant(const RMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  RMatrix work = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work(pivot, k) == 0) ++pivot;
    if (pivot == n) return make_rational(0);
    if (pivot != k) {
      det = -det;
      for (std::size_t j = k; j < n; ++j) std::swap(work(k, j), work(pivot, j));
    }
    det *= work(k, k);
    const Rational inv_p = 1 / work(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work(i, k) == 0) continue;
      const Rational f = work(i, k) * inv_p;
      for (std::size_t j = k; j < n; ++j) work(i, j) -= f * work(k, j);
    }
  }
  return det;
}

RVector min_norm_point(const RMatrix& a, const RVector& g) {
  if (g.size() != a.rows()) throw DimensionMismatch("min_norm_point rhs size");
  const RMatrix gram = mat_mul(a, a.transpose());
  const RVector y = solve_square(gram, g);  // SingularMatrix signals rank deficiency
  return transpose_vec(a, y);
}

namespace {

// Incremental column elimination used by extend_to_basis: keeps the selected
// columns in echelon form so a candidate is tested in O(m^2).
class ColumnEchelon {
 public:
  explicit ColumnEchelon(std::size_t m) : m_(m) {}

  std::size_t rank() const { return basis_.size(); }

  // Tries to add a column; returns false when it is dependent on the span.
  bool add(RVector col) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational f = col[pivot_rows_[k]] / basis_[k][pivot_rows_[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < m_; ++i) col[i] -= f * basis_[k][i];
    }
    std::size_t p = 0;
    while (p < m_ && col[p] == 0) ++p;
    if (p == m_) return false;
    pivot_rows_.push_back(p);
    basis_.push_back(std::move(col));
    return true;
  }

 private:
  std::size_t m_;
  std::vector<RVector> basis_;
  std::vector<std::size_t> pivot_rows_;
};

}  // namespace

std::vector<std::size_t> extend_to_basis(const RMatrix& a, const std::vector<std::size_t>& fixed) {
  const std::size_t m = a.rows();
  ColumnEchelon ech(m);
  std::vector<std::size_t> chosen;
  std::vector<bool> used(a.cols(), false);
  for (std::size_t j : fixed) {
    if (j >= a.cols()) throw DimensionMismatch("fixed column index out of range");
    if (used[j] || !ech.add(a.column(j)))
      throw DependentFixedColumns("fixed columns are linearly dependent");
    used[j] = true;
    chosen.push_back(j);
  }
  for (std::size_t j = 0; j < a.cols() && ech.rank() < m; ++j) {
    if (used[j]) continue;
    if (ech.add(a.column(j))) {
      used[j] = true;
      chosen.push_back(j);
    }
  }
  if (ech.rank() < m) throw RankDeficient("matrix does not have full row rank");
  return chosen;
}

RankReduced full_row_rank_reduce(const RMatrix& a, const RVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionMismatch("rhs size");

  // Forward elimination on [a | b]; rows that eliminate to zero in the a-part
  // are redundant, and inconsistent when their b-part stays nonzero.
  RMatrix work(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = a(i, j);
    work(i, n) = b[i];
  }
  std::vector<std::size_t> row_of(m);
  for (std::size_t i = 0; i < m; ++i) row_of[i] = i;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && work(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != rank) {
      std::swap(row_of[rank], row_of[pivot]);
      for (std::size_t j = 0; j <= n; ++j) std::swap(work(rank, j), work(pivot, j));
    }
    const Rational inv_p = 1 / work(rank, col);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (work(i, col) == 0) continue;
      const Rational f = work(i, col) * inv_p;
      for (std::size_t j = col; j <= n; ++j) work(i, j) -= f * work(rank, j);
    }
    ++rank;
  }

  RankReduced out;
  for (std::size_t i = rank; i < m; ++i) {
    if (work(i, n) != 0) {
      out.consistent = false;
      break;
    }
  }
  out.kept_rows.assign(row_of.begin(), row_of.begin() + rank);
  std::sort(out.kept_rows.begin(), out.kept_rows.end());
  out.a = a.select_rows(out.kept_rows);
  out.b.reserve(rank);
  for (std::size_t i : out.kept_rows) out.b.push_back(b[i]);
  return out;
}

}  // namespace tardos
