#include <algorithm>

#include "cotor/algebra.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cotor;

namespace {
bool vec_is_zero(const Field& f, const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [&](const Scalar& s) { return f.is_zero(s); });
}
}  // namespace

TEST_CASE("path algebra of 1->2") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  CHECK(a->dim() == 3);
  CHECK(validate_algebra(*a).empty());
  REQUIRE(a->idempotents().size() == 2);

  // Right-to-left composition: e1 A e2 = 0 and e2 A e1 is 1-dimensional.
  const Vec& e1 = a->idempotents()[0];
  const Vec& e2 = a->idempotents()[1];
  std::vector<Vec> e1Ae2, e2Ae1;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec x = a->mult(e1, a->mult(a->basis_vec(i), e2));
    Vec y = a->mult(e2, a->mult(a->basis_vec(i), e1));
    if (!vec_is_zero(f, x)) e1Ae2.push_back(x);
    if (!vec_is_zero(f, y)) e2Ae1.push_back(y);
  }
  CHECK(e1Ae2.empty());
  CHECK(e2Ae1.size() == 1);
}

TEST_CASE("trivial quiver gives the field") {
  auto a = fixtures::field_algebra(Field::rationals());
  CHECK(a->dim() == 1);
  CHECK(validate_algebra(*a).empty());
}

TEST_CASE("two-cycle with zero composites has dim 4") {
  Field f = Field::prime(2);
  auto a = fixtures::two_cycle_algebra(f);
  CHECK(a->dim() == 4);
  CHECK(validate_algebra(*a).empty());
}

TEST_CASE("unbounded quiver is rejected") {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{0, 0, "l"}};
  CHECK_THROWS_AS(path_algebra(q, {}, Field::prime(2), 16), InfiniteDimensional);
}

TEST_CASE("validate_algebra flags a perturbed structure constant") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  // copy with one structure constant flipped
  std::vector<std::vector<Vec>> sc(a->dim(), std::vector<Vec>(a->dim()));
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) sc[i][j] = a->sc(i, j);
  sc[2][2][0] = f.one();  // arrow squared made nonzero
  Algebra bad(f, a->labels(), sc, a->unit(), a->idempotents());
  auto diags = validate_algebra(bad);
  CHECK(!diags.empty());
  bool names_triple = std::any_of(diags.begin(), diags.end(), [](const auto& d) {
    return d.find("associativity") != std::string::npos ||
           d.find("identity") != std::string::npos;
  });
  CHECK(names_triple);
}

TEST_CASE("validate_algebra flags incomplete idempotent system") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  Algebra bad(f, a->labels(),
              {{a->sc(0, 0), a->sc(0, 1), a->sc(0, 2)},
               {a->sc(1, 0), a->sc(1, 1), a->sc(1, 2)},
               {a->sc(2, 0), a->sc(2, 1), a->sc(2, 2)}},
              a->unit(), {a->idempotents()[0]});
  auto diags = validate_algebra(bad);
  bool sum_violation = std::any_of(diags.begin(), diags.end(), [](const auto& d) {
    return d.find("sum") != std::string::npos;
  });
  CHECK(sum_violation);
}

TEST_CASE("corner algebras") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);

  auto c1 = corner_algebra(a, a->idempotents()[0]);
  CHECK(c1.corner->dim() == 1);
  CHECK(validate_algebra(*c1.corner).empty());

  auto full = corner_algebra(a, a->unit());
  CHECK(full.corner->dim() == a->dim());
  CHECK(validate_algebra(*full.corner).empty());

  Vec not_idem(a->dim(), f.zero());
  not_idem[2] = f.one();  // the arrow
  CHECK_THROWS_AS(corner_algebra(a, not_idem), NotIdempotent);
}

TEST_CASE("two-sided ideal of e2 in k(1->2)") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto ideal = two_sided_ideal_basis(*a, a->idempotents()[1]);
  CHECK(ideal.size() == 2);  // span{e2, a}

  auto whole = two_sided_ideal_basis(*a, a->unit());
  CHECK(whole.size() == 3);

  Vec zero(a->dim(), f.zero());
  CHECK(two_sided_ideal_basis(*a, zero).empty());
}

TEST_CASE("quotient algebras") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);

  auto q = quotient_algebra(a, two_sided_ideal_basis(*a, a->idempotents()[1]));
  CHECK(q.quotient->dim() == 1);
  CHECK(validate_algebra(*q.quotient).empty());

  auto q0 = quotient_algebra(a, {});
  CHECK(q0.quotient->dim() == 3);

  auto qall = quotient_algebra(a, two_sided_ideal_basis(*a, a->unit()));
  CHECK(qall.quotient->dim() == 0);

  // non-ideal subspace rejected: span{e1} is not an ideal
  CHECK_THROWS_AS(quotient_algebra(a, {a->idempotents()[0]}), NotAnIdeal);
}

TEST_CASE("radical of path algebras is the arrow ideal") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    auto a2 = fixtures::a2_path_algebra(f);
    auto rad = radical_basis(*a2);
    REQUIRE(rad.size() == 1);
    // the radical is spanned by the arrow (basis index 2)
    CHECK(!f.is_zero(rad[0][2]));
    CHECK(f.is_zero(rad[0][0]));
    CHECK(f.is_zero(rad[0][1]));

    auto a3 = fixtures::a3_path_algebra(f);
    CHECK(a3->dim() == 6);
    CHECK(radical_basis(*a3).size() == 3);  // a, b, ba

    auto cyc = fixtures::two_cycle_algebra(f);
    CHECK(radical_basis(*cyc).size() == 2);

    auto k = fixtures::field_algebra(f);
    CHECK(radical_basis(*k).empty());
  }
}

TEST_CASE("opposite algebra is valid and involutive on structure constants") {
  Field f = Field::prime(2);
  auto a = fixtures::a3_path_algebra(f);
  auto op = opposite_algebra(a);
  CHECK(validate_algebra(*op).empty());
  auto opop = opposite_algebra(op);
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) CHECK(opop->sc(i, j) == a->sc(i, j));
}
