#include <random>

#include "cotor/matrix.hpp"
#include "doctest.h"

using namespace cotor;

TEST_CASE("prime field arithmetic") {
  Field f2 = Field::prime(2);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
  CHECK(f2.inv(f2.one()) == f2.one());
  Field f5 = Field::prime(5);
  CHECK(f5.mul(f5.from_int(3), f5.from_int(4)) == f5.from_int(12));
  CHECK(f5.mul(f5.inv(f5.from_int(3)), f5.from_int(3)) == f5.one());
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("rational arithmetic stays reduced") {
  Field q = Field::rationals();
  Scalar half = q.div(q.one(), q.from_int(2));
  CHECK(q.add(half, half) == q.one());
  Scalar x = q.div(q.from_int(6), q.from_int(4));
  CHECK(x.num == 3);
  CHECK(x.den == 2);
  CHECK(q.to_string(x) == "3/2");
}

TEST_CASE("rref identity case") {
  Field f = Field::rationals();
  Matrix id = Matrix::identity(f, 2);
  RrefResult rr = rref(id);
  CHECK(rr.mat == id);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref all-ones over F_2") {
  Field f = Field::prime(2);
  Matrix m = Matrix::from_ints(f, 2, 2, {1, 1, 1, 1});
  RrefResult rr = rref(m);
  CHECK(rr.mat == Matrix::from_ints(f, 2, 2, {1, 1, 0, 0}));
  CHECK(rr.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref zero matrix") {
  Field f = Field::prime(3);
  Matrix z = Matrix::zero(f, 2, 3);
  RrefResult rr = rref(z);
  CHECK(rr.mat == z);
  CHECK(rr.pivots.empty());
}

TEST_CASE("kernel basis cases") {
  Field f2 = Field::prime(2);
  CHECK(kernel_basis(Matrix::identity(f2, 3)).empty());

  Matrix m = Matrix::from_ints(f2, 1, 2, {1, 1});
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == std::vector<Scalar>{f2.one(), f2.one()});

  auto kz = kernel_basis(Matrix::zero(f2, 2, 3));
  CHECK(kz.size() == 3);
}

TEST_CASE("solve cases") {
  Field f2 = Field::prime(2);
  Matrix id = Matrix::identity(f2, 2);
  std::vector<Scalar> b{f2.one(), f2.zero()};
  CHECK(solve(id, b) == b);

  Matrix m = Matrix::from_ints(f2, 2, 2, {1, 1, 0, 0});
  std::vector<Scalar> bad{f2.one(), f2.one()};
  CHECK_THROWS_AS(solve(m, bad), NoSolution);

  std::vector<Scalar> ok{f2.one(), f2.zero()};
  auto x = solve(m, ok);
  // canonical: free variable zeroed
  CHECK(x == std::vector<Scalar>{f2.one(), f2.zero()});
}

TEST_CASE("rank identity and idempotence of rref on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Field f = trial % 2 ? Field::prime(3) : Field::prime(2);
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::vector<long long> vals(r * c);
    for (auto& v : vals) v = rng() % 7;
    Matrix m = Matrix::from_ints(f, r, c, vals);
    RrefResult rr = rref(m);
    CHECK(rr.pivots.size() == rank(m));
    CHECK(kernel_basis(m).size() == c - rank(m));
    CHECK(rref(rr.mat).mat == rr.mat);
    // any solvable system solves exactly
    for (std::size_t j = 0; j < c; ++j) {
      auto b = m.col_vec(j);
      auto x = solve(m, b);
      CHECK(m.apply(x) == b);
    }
  }
}

TEST_CASE("rationals: solve is exact") {
  Field q = Field::rationals();
  Matrix m = Matrix::from_ints(q, 2, 2, {2, 1, 1, 3});
  std::vector<Scalar> b{q.from_int(1), q.from_int(0)};
  auto x = solve(m, b);
  CHECK(m.apply(x) == b);
  CHECK(x[0] == q.div(q.from_int(3), q.from_int(5)));
}
