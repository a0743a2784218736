#include <doctest.h>

#include <random>

#include "gsv/snf.hpp"

using namespace gsv;

namespace {

SnfOptions with_inverses() {
  SnfOptions opt;
  opt.want_u_inv = opt.want_v_inv = true;
  return opt;
}

void check_postconditions(const SparseIntMatrix& m, const SnfResult& r) {
  CHECK(r.u * m * r.v == r.s);
  CHECK(abs(r.u.determinant()) == 1);
  CHECK(abs(r.v.determinant()) == 1);
  for (int i = 0; i + 1 < r.rank; ++i) CHECK(r.diagonal[i + 1] % r.diagonal[i] == 0);
  for (const auto& d : r.diagonal) CHECK(d > 0);
  // Off-diagonal entries vanish.
  for (int j = 0; j < r.s.cols; ++j)
    for (const auto& [i, v] : r.s.col[j]) CHECK(i == j);
}

}  // namespace

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
  SparseIntMatrix m(2, 2);
  m.set(0, 0, 2);
  m.set(1, 1, 3);
  const SnfResult r = smith_normal_form(m);
  REQUIRE(r.rank == 2);
  CHECK(r.diagonal[0] == 1);
  CHECK(r.diagonal[1] == 6);
  check_postconditions(m, r);
}

TEST_CASE("snf of the zero matrix") {
  const SparseIntMatrix m(3, 4);
  const SnfResult r = smith_normal_form(m);
  CHECK(r.rank == 0);
  CHECK(r.s.nnz() == 0);
  check_postconditions(m, r);
}

TEST_CASE("snf postconditions on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    SparseIntMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m.set(i, j, entry(rng));
    const SnfResult r = smith_normal_form(m, with_inverses());
    check_postconditions(m, r);
    CHECK(r.u_inv * r.s * r.v_inv == m);
    CHECK(r.u * r.u_inv == SparseIntMatrix::identity(6));
    CHECK(r.v * r.v_inv == SparseIntMatrix::identity(6));
  }
}

TEST_CASE("snf of rectangular and rank-deficient matrices") {
  // Rows spanning a rank-2 lattice with an index-3 quotient.
  SparseIntMatrix m(2, 3);
  m.set(0, 0, 3);
  m.set(0, 1, 3);
  m.set(1, 1, 3);
  m.set(1, 2, 6);
  const SnfResult r = smith_normal_form(m, with_inverses());
  check_postconditions(m, r);
  CHECK(r.rank == 2);
  CHECK(r.diagonal[0] == 3);
  CHECK(r.diagonal[1] == 3);
}

TEST_CASE("determinant by fraction-free elimination") {
  SparseIntMatrix m(3, 3);
  m.set(0, 0, 2);
  m.set(0, 1, -1);
  m.set(1, 0, 1);
  m.set(1, 1, 3);
  m.set(1, 2, 4);
  m.set(2, 2, 5);
  CHECK(m.determinant() == 35);
  CHECK(SparseIntMatrix::identity(4).determinant() == 1);
  CHECK(SparseIntMatrix(2, 2).determinant() == 0);
}

TEST_CASE("matrix apply and product shapes") {
  SparseIntMatrix a(2, 3);
  a.set(0, 0, 1);
  a.set(1, 2, -2);
  const std::vector<Int> y = a.apply({Int(3), Int(0), Int(5)});
  CHECK(y == std::vector<Int>{Int(3), Int(-10)});
  CHECK_THROWS_AS(a.apply({Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(a * a, std::invalid_argument);
}
