#include <algorithm>

#include "cotor/homological.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cotor;

namespace {

// simple over `alg` on which the idempotent with the given index acts as 1
ModulePtr simple_at(const AlgebraPtr& alg, std::size_t idem_index) {
  for (const auto& s : simples(alg))
    if (!s->act(alg->idempotents()[idem_index]).is_zero()) return s;
  throw Error("no simple at that vertex");
}

}  // namespace

TEST_CASE("minimal resolutions over k(1->2)") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto projs = projectives(a);
  auto s1 = simple_at(a, 0);

  auto r0 = projective_resolution(projs[0], 4);
  CHECK(r0.complete);
  CHECK(r0.terms.size() == 1);
  CHECK(projective_dimension(projs[0], 4) == 0);

  auto r1 = projective_resolution(s1, 4);
  CHECK(r1.complete);
  REQUIRE(r1.terms.size() == 2);
  CHECK(r1.terms[0]->dim() == 2);
  CHECK(r1.terms[1]->dim() == 1);
  CHECK(projective_dimension(s1, 4) == 1);
  // exactness of the resolved sequence
  CHECK(r1.augmentation->is_surjective());
  CHECK((r1.augmentation->mat * r1.differentials[0].mat).is_zero());
  CHECK(rank(r1.differentials[0].mat) + rank(r1.augmentation->mat) ==
        r1.terms[0]->dim());
}

TEST_CASE("non-terminating resolution over the zero-composite two-cycle") {
  auto a = fixtures::two_cycle_algebra(Field::prime(2));
  auto s1 = simple_at(a, 0);
  auto r = projective_resolution(s1, 3);
  CHECK(!r.complete);
  CHECK(r.terms.size() == 4);
  CHECK(!projective_dimension(s1, 3).has_value());
}

TEST_CASE("ext dimensions over k(1->2)") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto s1 = simple_at(a, 0);
  auto s2 = simple_at(a, 1);
  CHECK(ext_dim(s1, s2, 1) == 1);
  CHECK(ext_dim(s2, s1, 1) == 0);
  auto univ = enumerate_indecomposables(a, 2);
  for (const auto& m : univ)
    for (const auto& n : univ) {
      CHECK(ext_dim(m, n, 0) == hom_space(*m, *n).size());
      CHECK(ext_dim(m, n, 2) == 0);  // hereditary
    }
}

TEST_CASE("ext over the two-cycle algebra has unbounded degree") {
  auto a = fixtures::two_cycle_algebra(Field::prime(2));
  auto s1 = simple_at(a, 0);
  auto s2 = simple_at(a, 1);
  CHECK(ext_dim(s1, s2, 1) == 1);
  CHECK(ext_dim(s1, s1, 1) == 0);
  CHECK(ext_dim(s1, s1, 2) == 1);
  CHECK(ext_dim(s1, s2, 2) == 0);
}

TEST_CASE("ext via dual coresolution agrees with the direct computation") {
  for (auto make : {+[](Field f) { return fixtures::a2_path_algebra(f); },
                    +[](Field f) { return fixtures::two_cycle_algebra(f); }}) {
    auto a = make(Field::prime(2));
    auto univ = enumerate_indecomposables(a, 2);
    for (const auto& m : univ)
      for (const auto& n : univ)
        for (std::size_t d = 0; d <= 2; ++d)
          CHECK(ext_dim(m, n, d) == ext_dim_via_duals(m, n, d));
  }
}

TEST_CASE("ext classes translate to short exact sequences and back") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto s1 = simple_at(a, 0);
  auto s2 = simple_at(a, 1);
  auto projs = projectives(a);

  auto basis = ext1_basis(s1, s2);
  REQUIRE(basis.size() == 1);
  CHECK(!basis[0].is_zero());

  auto ses = ext1_to_ses(basis[0]);
  CHECK(validate_ses(ses).empty());
  CHECK(is_isomorphic(ses.projection.source, projs[0]).isomorphic);
  CHECK(connecting_class(ses) == basis[0]);

  // zero class splits
  auto zero_cls = make_ext1(s1, s2, Matrix::zero(f, 1, 1));
  CHECK(zero_cls.is_zero());
  auto split = ext1_to_ses(zero_cls);
  CHECK(validate_ses(split).empty());
  auto sum = direct_sum(a, {s1, s2}).module;
  CHECK(is_isomorphic(split.projection.source, sum).isomorphic);
  CHECK(connecting_class(split).is_zero());
}

TEST_CASE("tensor with the corner: unit isomorphism") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto le = *left_ideal_bimodule(a, a->idempotents()[0]).bimodule;
  CHECK(validate_bimodule(le).empty());
  auto t = tensor_over(le, regular_module(le.right_algebra()));
  CHECK(validate_module(*t).empty());
  CHECK(is_isomorphic(t, le.as_left_module()).isomorphic);
  CHECK(t->dim() == 2);
}

TEST_CASE("tensor kills modules concentrated away from the idempotent") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto s1 = simple_at(a, 0);
  // e2 Lambda tensor_Lambda S1 = 0, via tor in degree zero
  auto re2 = *right_ideal_bimodule(a, a->idempotents()[1]).bimodule;
  CHECK(validate_bimodule(re2).empty());
  CHECK(tor_dim(right_structure(re2), s1, 0) == 0);
  // and as a module-valued tensor over the corner side
  auto t = tensor_over(re2, s1);
  CHECK(t->dim() == 0);
}

TEST_CASE("tor computations and balance") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto op = opposite_algebra(a);
  auto s1 = simple_at(a, 0);
  auto s2r = simple_at(op, 1);  // simple right module at vertex 2
  CHECK(tor_dim(s2r, s1, 1) == 1);
  // balance: resolve the other argument instead
  CHECK(tor_dim(s1, s2r, 1) == 1);
  // flatness of projectives
  for (const auto& p : projectives(a)) {
    CHECK(tor_dim(s2r, p, 1) == 0);
    CHECK(tor_dim(simple_at(op, 0), p, 1) == 0);
  }
  // degree zero equals the tensor dimension
  auto re2 = *right_ideal_bimodule(a, a->idempotents()[1]).bimodule;
  CHECK(tor_dim(right_structure(re2), s1, 0) == tensor_over(re2, s1)->dim());
}

TEST_CASE("tensor of bimodules") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  // (Lambda e1) tensor_{e1 Lambda e1} (e1 Lambda) is a Lambda-Lambda-bimodule
  auto le = *left_ideal_bimodule(a, a->idempotents()[0]).bimodule;
  auto re = *right_ideal_bimodule(a, a->idempotents()[0]).bimodule;
  auto t = tensor_bimodules(le, re);
  CHECK(validate_bimodule(*t).empty());
  CHECK(t->dim() == 2);  // Lambda e1 tensor e1 Lambda = span{e1, a} x {e1}
}

TEST_CASE("hom functor") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto reg = *regular_bimodule(a);
  for (const auto& p : projectives(a)) {
    auto h = hom_functor(reg, p);
    CHECK(validate_module(*h).empty());
    CHECK(is_isomorphic(h, p).isomorphic);
  }
  auto re1 = *right_ideal_bimodule(a, a->idempotents()[0]).bimodule;
  auto h = hom_functor(re1, regular_module(re1.left_algebra()));
  CHECK(h->dim() == 1);
  CHECK(validate_module(*h).empty());
}

TEST_CASE("pullback and pushout") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto s1 = simple_at(a, 0);
  auto s2 = simple_at(a, 1);
  auto projs = projectives(a);
  auto cover = projective_cover(s1);

  // pullback along the identity returns the other source
  auto pb = pullback(cover, identity_map(s1));
  CHECK(is_isomorphic(pb.module, cover.source).isomorphic);
  CHECK(validate_map(pb.leg1).empty());
  CHECK(validate_map(pb.leg2).empty());

  // degenerate pullback against the zero module picks out the kernel
  auto pb0 = pullback(cover, zero_map(zero_module(a), s1));
  CHECK(is_isomorphic(pb0.module, s2).isomorphic);

  // pushout of a mono along any map is a mono on the other leg
  auto rad = radical_submodule(projs[0]);
  for (const auto& hmat : hom_space(*rad.module, *s2)) {
    ModuleMap g(rad.module, s2, hmat);
    auto po = pushout(rad.map, g);
    CHECK(po.leg2.is_injective());
    CHECK((compose(po.leg1, rad.map).mat == compose(po.leg2, g).mat));
  }
}

TEST_CASE("long exact sequence rank bookkeeping") {
  Field f = Field::prime(2);
  auto a = fixtures::a2_path_algebra(f);
  auto s1 = simple_at(a, 0);
  auto s2 = simple_at(a, 1);
  auto basis = ext1_basis(s1, s2);
  REQUIRE(basis.size() == 1);
  auto ses = ext1_to_ses(basis[0]);
  ModulePtr X = ses.inclusion.source;   // S2
  ModulePtr Y = ses.projection.source;  // P1
  ModulePtr Z = ses.projection.target;  // S1
  for (const auto& t : enumerate_indecomposables(a, 2)) {
    long long alt = (long long)hom_space(*Z, *t).size() -
                    (long long)hom_space(*Y, *t).size() +
                    (long long)hom_space(*X, *t).size() -
                    (long long)ext_dim(Z, t, 1) + (long long)ext_dim(Y, t, 1) -
                    (long long)ext_dim(X, t, 1);
    CHECK(alt == 0);
  }
}
