#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tardos/linalg.hpp"

#include <random>

using namespace tardos;

namespace {

std::int64_t rng_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

RMatrix random_matrix(std::mt19937_64& g, std::size_t m, std::size_t n, std::int64_t mag) {
  RMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = make_rational(rng_int(g, -mag, mag));
  return a;
}

RVector random_vector(std::mt19937_64& g, std::size_t n, std::int64_t mag) {
  RVector v(n);
  for (auto& x : v) x = make_rational(rng_int(g, -mag, mag));
  return v;
}

}  // namespace

TEST_CASE("solve_square basic cases") {
  CHECK(solve_square(RMatrix::identity(2), {make_rational(3), make_rational(-1)}) ==
        RVector{make_rational(3), make_rational(-1)});
  const RMatrix m{{1, 1}, {1, 0}};
  CHECK(solve_square(m, {make_rational(2), make_rational(1)}) ==
        RVector{make_rational(1), make_rational(1)});
  CHECK_THROWS_AS(solve_square(RMatrix{{1, 1}, {2, 2}}, {make_rational(1), make_rational(1)}),
                  SingularMatrix);
}

TEST_CASE("solve_square substitutes back exactly") {
  std::mt19937_64 g(5);
  int solved = 0;
  while (solved < 200) {
    const std::size_t n = static_cast<std::size_t>(rng_int(g, 1, 6));
    const RMatrix m = random_matrix(g, n, n, 6);
    const RVector rhs = random_vector(g, n, 9);
    try {
      const RVector x = solve_square(m, rhs);
      CHECK(mat_vec(m, x) == rhs);
      ++solved;
    } catch (const SingularMatrix&) {
      CHECK(determinant(m) == 0);
    }
  }
}

TEST_CASE("inverse round trip") {
  std::mt19937_64 g(11);
  int done = 0;
  while (done < 50) {
    const std::size_t n = static_cast<std::size_t>(rng_int(g, 1, 5));
    const RMatrix m = random_matrix(g, n, n, 5);
    try {
      const RMatrix inv = inverse(m);
      CHECK(mat_mul(m, inv) == RMatrix::identity(n));
      ++done;
    } catch (const SingularMatrix&) {
    }
  }
}

TEST_CASE("min_norm_point examples") {
  CHECK(min_norm_point(RMatrix{{1, 1}}, {make_rational(2)}) ==
        RVector{make_rational(1), make_rational(1)});
  CHECK(min_norm_point(RMatrix::identity(2), {make_rational(5), make_rational(7)}) ==
        RVector{make_rational(5), make_rational(7)});
  // x = (1,0,1) solves and is orthogonal to the null space of [[1,0,1]].
  const RVector x = min_norm_point(RMatrix{{1, 0, 1}}, {make_rational(2)});
  CHECK(x == RVector{make_rational(1), make_rational(0), make_rational(1)});
  CHECK(dot(x, {make_rational(0), make_rational(1), make_rational(0)}) == 0);
  CHECK(dot(x, {make_rational(1), make_rational(0), make_rational(-1)}) == 0);
  CHECK_THROWS_AS(min_norm_point(RMatrix{{1, 1}, {2, 2}}, {make_rational(1), make_rational(2)}),
                  SingularMatrix);
}

TEST_CASE("min_norm_point minimizes the norm over the affine set") {
  std::mt19937_64 g(23);
  int done = 0;
  while (done < 60) {
    const std::size_t m = static_cast<std::size_t>(rng_int(g, 1, 3));
    const std::size_t n = m + static_cast<std::size_t>(rng_int(g, 1, 4));
    const RMatrix a = random_matrix(g, m, n, 4);
    const RVector goal = random_vector(g, m, 6);
    RVector x;
    try {
      x = min_norm_point(a, goal);
    } catch (const SingularMatrix&) {
      continue;
    }
    CHECK(mat_vec(a, x) == goal);
    const Rational base = dot(x, x);
    // Perturb by random null-space elements: norm can only grow.
    for (int t = 0; t < 10; ++t) {
      const RVector z = random_vector(g, n, 3);
      const RVector az = mat_vec(a, z);
      RVector null_dir;
      try {
        // Project z onto the null space: z - a^T (a a^T)^{-1} a z.
        const RVector corr = min_norm_point(a, az);
        null_dir.resize(n);
        for (std::size_t i = 0; i < n; ++i) null_dir[i] = z[i] - corr[i];
      } catch (const SingularMatrix&) {
        break;
      }
      RVector y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + null_dir[i];
      CHECK(mat_vec(a, y) == goal);
      CHECK(dot(y, y) >= base);
    }
    ++done;
  }
}

TEST_CASE("extend_to_basis examples") {
  CHECK(extend_to_basis(RMatrix::identity(3), {}) == std::vector<std::size_t>{0, 1, 2});
  const RMatrix a{{1, 0, 1}, {0, 1, 1}};
  const auto cols = extend_to_basis(a, {2});
  CHECK(cols == std::vector<std::size_t>{2, 0});
  CHECK(determinant(a.columns(cols)) == make_rational(-1));
  CHECK_THROWS_AS(extend_to_basis(RMatrix{{1, 1}, {2, 2}}, {}), RankDeficient);
  CHECK_THROWS_AS(extend_to_basis(RMatrix{{1, 2}, {2, 4}}, {0, 1}), DependentFixedColumns);
}

TEST_CASE("extend_to_basis yields nonsingular G, unimodular on signed incidence columns") {
  // Node-arc incidence pattern (totally unimodular): |det G| must be 1.
  const RMatrix a{{1, 0, -1, 1, 0}, {-1, 1, 0, 0, 1}, {0, -1, 1, -1, 0}};
  const auto cols = extend_to_basis(a, {});
  const Rational d = determinant(a.columns(cols));
  CHECK(abs(d) == 1);
  std::mt19937_64 g(71);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng_int(g, 1, 4));
    const std::size_t n = m + static_cast<std::size_t>(rng_int(g, 0, 4));
    const RMatrix r = random_matrix(g, m, n, 3);
    try {
      const auto chosen = extend_to_basis(r, {});
      CHECK(determinant(r.columns(chosen)) != 0);
    } catch (const RankDeficient&) {
      const auto reduced = full_row_rank_reduce(r, RVector(m, make_rational(0)));
      CHECK(reduced.kept_rows.size() < m);  // genuinely rank deficient
    }
  }
}

TEST_CASE("full_row_rank_reduce") {
  const RMatrix dup{{1, 1}, {2, 2}};
  const auto ok = full_row_rank_reduce(dup, {make_rational(1), make_rational(2)});
  CHECK(ok.consistent);
  CHECK(ok.a == RMatrix{{1, 1}});
  CHECK(ok.b == RVector{make_rational(1)});
  CHECK(ok.kept_rows == std::vector<std::size_t>{0});

  const auto bad = full_row_rank_reduce(dup, {make_rational(1), make_rational(3)});
  CHECK_FALSE(bad.consistent);

  const auto id = full_row_rank_reduce(RMatrix::identity(2), {make_rational(4), make_rational(5)});
  CHECK(id.consistent);
  CHECK(id.a == RMatrix::identity(2));
  CHECK(id.b == RVector{make_rational(4), make_rational(5)});
}

TEST_CASE("full_row_rank_reduce preserves the solution set") {
  std::mt19937_64 g(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng_int(g, 1, 5));
    const std::size_t n = static_cast<std::size_t>(rng_int(g, 1, 5));
    RMatrix a = random_matrix(g, m, n, 3);
    // Force some dependent rows.
    if (m >= 2 && rng_int(g, 0, 1)) {
      for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * 2;
    }
    const RVector x0 = random_vector(g, n, 4);
    const RVector b = mat_vec(a, x0);  // consistent by construction
    const auto red = full_row_rank_reduce(a, b);
    CHECK(red.consistent);
    CHECK(mat_vec(red.a, x0) == red.b);
    const auto again = full_row_rank_reduce(red.a, red.b);
    CHECK(again.kept_rows.size() == red.a.rows());  // already full row rank
  }
}
