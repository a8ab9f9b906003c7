#include <doctest.h>

#include <random>

#include "wreg/linalg.hpp"

using namespace wreg;

namespace {

RatMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  RatMat out(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

RatMat random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  RatMat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 4);
      m(i, j) = Rat(num, den);
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank basics") {
  CHECK(rank_exact(mat({{1, 0}, {0, 1}})) == 2);
  CHECK(rank_exact(RatMat::Zero(3, 4)) == 0);
  CHECK(rank_exact(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_exact(RatMat(0, 5)) == 0);
  CHECK(rank_exact(RatMat(5, 0)) == 0);
}

TEST_CASE("kernel and cokernel dimensions") {
  CHECK(kernel_dim(mat({{1, 0}, {0, 1}})) == 0);
  CHECK(cokernel_dim(mat({{1, 0}, {0, 1}})) == 0);
  CHECK(kernel_dim(RatMat::Zero(3, 4)) == 4);
  CHECK(cokernel_dim(RatMat::Zero(3, 4)) == 3);
  CHECK(kernel_dim(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(cokernel_dim(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("subquotient dimensions") {
  // empty maps around a 3-dimensional ambient space
  CHECK(subquotient_dim(RatMat(3, 0), RatMat(0, 3)) == 3);
  CHECK(subquotient_dim(mat({{1}, {0}}), mat({{0, 1}})) == 0);
  CHECK(subquotient_dim(RatMat::Zero(2, 1), mat({{0, 0}})) == 2);
  CHECK_THROWS_AS(subquotient_dim(mat({{1}, {0}}), mat({{1, 0}})), NotAComplex);
}

TEST_CASE("modular ranks") {
  CHECK(rank_modular(mat({{1, 0}, {0, 1}}), 5) == 2);
  CHECK(rank_modular(mat({{1, 2}, {2, 4}}), 7) == 1);
  CHECK(rank_modular(mat({{5}}), 5) == 0);  // strictly below the exact rank
  RatMat half(1, 1);
  half(0, 0) = Rat(1, 5);
  CHECK_THROWS_AS(rank_modular(half, 5), BadPrime);
  CHECK_THROWS_AS(rank_modular(half, 1), BadPrime);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Index rows = 1 + static_cast<Index>(rng() % 6);
    Index cols = 1 + static_cast<Index>(rng() % 6);
    RatMat m = random_matrix(rng, rows, cols);
    Index r = rank_exact(m);
    CHECK(r + kernel_dim(m) == cols);
    CHECK(r + cokernel_dim(m) == rows);
    CHECK(rank_exact(m.transpose()) == r);

    RatMat perm = m;
    perm.row(0).swap(perm.row(rows - 1));
    perm.col(0).swap(perm.col(cols - 1));
    CHECK(rank_exact(perm) == r);

    // the reduced echelon route must agree with the fraction-free route
    CHECK(rref(m).rank() == r);

    bool attained = false;
    for (std::uint64_t p : {1073741789ull, 1000000007ull, 998244353ull}) {
      Index rm = rank_modular(m, p);
      CHECK(rm <= r);
      if (rm == r) attained = true;
    }
    CHECK(attained);
  }
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RatMat m = random_matrix(rng, 2 + static_cast<Index>(rng() % 4),
                             2 + static_cast<Index>(rng() % 4));
    RatMat k = kernel_basis(m);
    CHECK(k.cols() == kernel_dim(m));
    if (k.cols() > 0) {
      CHECK(is_zero(RatMat(m * k)));
      CHECK(rank_exact(k) == k.cols());
    }
  }
}

TEST_CASE("solve_in_basis finds coordinates") {
  RatMat basis = mat({{1, 0}, {1, 1}, {0, 2}});
  RatMat target(3, 1);
  target << Rat(3), Rat(5), Rat(4);
  auto x = solve_in_basis(basis, target);
  REQUIRE(x.has_value());
  CHECK(is_zero(RatMat(basis * (*x) - target)));

  RatMat outside(3, 1);
  outside << Rat(1), Rat(0), Rat(0);
  RatMat plane = mat({{1, 0}, {0, 1}, {0, 0}});
  RatMat bad(3, 1);
  bad << Rat(0), Rat(0), Rat(1);
  CHECK(!solve_in_basis(plane, bad).has_value());
}

TEST_CASE("column space insertion is deterministic") {
  ColumnSpace cs(3);
  RatVec v1(3), v2(3), v3(3);
  v1 << 1, 2, 3;
  v2 << 2, 4, 6;
  v3 << 0, 1, 1;
  CHECK(cs.insert(v1));
  CHECK(!cs.insert(v2));
  CHECK(cs.insert(v3));
  CHECK(cs.rank() == 2);
  RatVec combo = v1 + v3;
  CHECK(cs.contains(combo));
}

TEST_SUITE_END();
