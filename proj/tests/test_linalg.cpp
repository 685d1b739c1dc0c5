#include <random>

#include "doctest.h"
#include "raolab/matrix.hpp"

using namespace raolab;

namespace {

FieldMatrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FieldMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Fp>(rng() % f.p());
  return m;
}
}  // namespace

TEST_CASE("empty and identity ranks") {
  FieldSpec f;
  CHECK(rank(FieldMatrix(f, 0, 0)) == 0);
  CHECK(rank(FieldMatrix::identity(f, 7)) == 7);
  CHECK(kernel_dimension(FieldMatrix::identity(f, 5)) == 0);
  CHECK(kernel_dimension(FieldMatrix(f, 3, 9)) == 9);
}

TEST_CASE("rank of a product of known-rank factors") {
  FieldSpec f;
  std::mt19937_64 rng(7);
  const FieldMatrix a = random_matrix(f, 50, 30, rng);
  const FieldMatrix b = random_matrix(f, 30, 80, rng);
  // Factor ranks checked independently: a 30x30 block of each is invertible.
  REQUIRE(rank(a) == 30);
  REQUIRE(rank(b) == 30);
  CHECK(rank(a * b) == 30);
  CHECK(kernel_dimension(a * b) == 50);
}

TEST_CASE("duplicated rows do not add rank") {
  FieldSpec f;
  std::mt19937_64 rng(11);
  const FieldMatrix base = random_matrix(f, 30, 80, rng);
  FieldMatrix dup = vconcat(base, base);
  for (std::size_t i = 0; i < 20; ++i) {
    auto r = dup.row(i);
    for (auto& v : r) v = f.mul(v, 3);
  }
  CHECK(rank(dup) == rank(base));
}

TEST_CASE("multiplication by a linear form in two variables is injective") {
  FieldSpec f;
  // Columns: x^2, xy, y^2 multiplied by (2x + 5y), in basis x^3, x^2y, xy^2, y^3.
  FieldMatrix m(f, 4, 3);
  const Fp a = 2, b = 5;
  for (int j = 0; j < 3; ++j) {
    m(j, j) = a;
    m(j + 1, j) = b;
  }
  CHECK(kernel_dimension(m) == 0);
  CHECK(kernel_dimension(m.transpose()) == 1);
}

TEST_CASE("image sum dimension") {
  FieldSpec f;
  std::mt19937_64 rng(3);
  const FieldMatrix a = random_matrix(f, 10, 4, rng);
  const FieldMatrix b = random_matrix(f, 10, 4, rng);
  CHECK(image_sum_dimension(a, b) == 8);
  CHECK(image_sum_dimension(a, a) == 4);
  const FieldMatrix id = FieldMatrix::identity(f, 6);
  CHECK(image_sum_dimension(id, id) == 6);
  CHECK(image_sum_dimension(FieldMatrix(f, 10, 4), b) == rank(b));
  CHECK_THROWS_AS(image_sum_dimension(a, FieldMatrix(f, 9, 2)), DimensionMismatch);
}

TEST_CASE("rank invariants on random low-rank matrices") {
  FieldSpec f(65537);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12, k = rng() % 6;
    const FieldMatrix m = random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
    const std::size_t rk = rank(m);
    CHECK(rk <= std::min({r, c, k}));
    CHECK(rank(m.transpose()) == rk);
    CHECK(kernel_dimension(m) + rk == c);
    // Row reversal.
    FieldMatrix rev(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rev(i, j) = m(r - 1 - i, j);
    CHECK(rank(rev) == rk);
    const FieldMatrix other = random_matrix(f, r, 1 + rng() % 4, rng);
    const std::size_t s = image_sum_dimension(m, other);
    CHECK(s >= std::max(rk, rank(other)));
    CHECK(s <= rk + rank(other));
  }
}

TEST_CASE("nullspace, left nullspace and solve") {
  FieldSpec f;
  std::mt19937_64 rng(5);
  const FieldMatrix m = random_matrix(f, 6, 3, rng) * random_matrix(f, 3, 8, rng);
  const FieldMatrix n = nullspace(m);
  CHECK(n.cols() == 5);
  CHECK(rank(m * n) == 0);
  const FieldMatrix l = left_nullspace(m);
  CHECK(l.rows() == 3);
  CHECK(rank(l * m) == 0);
  std::vector<Fp> x0(8);
  for (auto& v : x0) v = static_cast<Fp>(rng() % f.p());
  const FieldMatrix xcol(f, 8, 1, x0);
  const FieldMatrix b = m * xcol;
  const auto x = solve(m, b.entries());
  REQUIRE(x.has_value());
  CHECK(m * FieldMatrix(f, 8, 1, *x) == b);
  std::vector<Fp> bad(6, 0);
  bad[0] = 1;
  // A rank-3 image in a 6-dimensional space misses most vectors.
  const FieldMatrix probe = hconcat(m, FieldMatrix(f, 6, 1, bad));
  if (rank(probe) > rank(m)) CHECK_FALSE(solve(m, bad).has_value());
}

TEST_CASE("field checks") {
  CHECK_THROWS_AS(FieldSpec(32004), FieldError);
  FieldSpec f;
  CHECK(f.mul(f.inv(1234), 1234) == 1);
  CHECK(f.lift(f.from_int(-3)) == -3);
}
