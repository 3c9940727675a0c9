#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotor/algebra.hpp"
#include "cotor/matrix.hpp"

namespace cotor {

struct CapExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Left module over a fixed algebra: one action matrix per algebra basis
/// element, all of shape dim x dim.
class Module {
 public:
  Module(AlgebraPtr alg, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return alg_->field(); }
  const Matrix& action(std::size_t basis_index) const { return action_[basis_index]; }

  /// Action matrix of an arbitrary algebra element.
  Matrix act(const Vec& x) const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

using ModulePtr = std::shared_ptr<const Module>;

/// Zero-dimensional module.
ModulePtr zero_module(const AlgebraPtr& a);

/// The left regular module (basis = algebra basis, action = left
/// multiplication).
ModulePtr regular_module(const AlgebraPtr& a);

/// Empty list when the module axioms hold; diagnostics otherwise.
std::vector<std::string> validate_module(const Module& m);

struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  Matrix mat;  // target.dim x source.dim

  ModuleMap(ModulePtr s, ModulePtr t, Matrix m);
  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const { return mat.is_zero(); }
};

/// Empty when f intertwines the actions; diagnostics otherwise.
std::vector<std::string> validate_map(const ModuleMap& f);

ModuleMap identity_map(const ModulePtr& m);
ModuleMap zero_map(const ModulePtr& src, const ModulePtr& tgt);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

struct ShortExactSequence {
  ModuleMap inclusion;   // X -> Y
  ModuleMap projection;  // Y -> Z
};

/// Empty when inclusion is mono, projection epi, and im = ker; diagnostics
/// otherwise.
std::vector<std::string> validate_ses(const ShortExactSequence& s);

/// B-A-bimodule: left action of `left_alg`, right action of `right_alg`.
/// right_action(i) is the matrix of v -> v * b_i, so R(xy) = R(y) R(x)
/// (antihomomorphism) and both actions commute entrywise.
class Bimodule {
 public:
  Bimodule(AlgebraPtr left_alg, AlgebraPtr right_alg,
           std::vector<Matrix> left_action, std::vector<Matrix> right_action);

  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left_action(std::size_t i) const { return left_action_[i]; }
  const Matrix& right_action(std::size_t i) const { return right_action_[i]; }
  Matrix left_act(const Vec& x) const;
  Matrix right_act(const Vec& x) const;

  /// Forget the right action.
  ModulePtr as_left_module() const;

 private:
  AlgebraPtr left_, right_;
  std::size_t dim_;
  std::vector<Matrix> left_action_, right_action_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

std::vector<std::string> validate_bimodule(const Bimodule& b);

/// The algebra as a bimodule over itself.
BimodulePtr regular_bimodule(const AlgebraPtr& a);
/// The left ideal Ae as an A-(eAe)-bimodule; `ambient_basis` columns give
/// its basis inside A.
struct IdealBimodule {
  BimodulePtr bimodule;
  Matrix ambient_basis;
};
IdealBimodule left_ideal_bimodule(const AlgebraPtr& a, const Vec& e);
/// The right ideal eA as an (eAe)-A-bimodule.
IdealBimodule right_ideal_bimodule(const AlgebraPtr& a, const Vec& e);

/// Basis of Hom_A(m, n) as matrices (deterministic order).
std::vector<Matrix> hom_space(const Module& m, const Module& n);

struct SubquotientResult {
  ModulePtr module;
  ModuleMap map;  // inclusion (kernel/image) or projection (cokernel)
};

SubquotientResult kernel(const ModuleMap& f);
SubquotientResult cokernel(const ModuleMap& f);
SubquotientResult image(const ModuleMap& f);

/// Submodule spanned by the given ambient vectors (closed under the action).
SubquotientResult submodule_spanned_by(const ModulePtr& m,
                                       const std::vector<Vec>& gens);

struct DirectSumResult {
  ModulePtr module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSumResult direct_sum(const AlgebraPtr& a,
                           const std::vector<ModulePtr>& parts);

struct IsoResult {
  bool isomorphic = false;
  std::optional<ModuleMap> witness;  // invertible map when isomorphic
  std::string certificate;           // distinguishing evidence otherwise
};

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n,
                        std::size_t search_cap = 1u << 20);

/// All idempotent endomorphisms when exhaustive enumeration fits the cap;
/// over the rationals, {0, 1} plus any splitting idempotent found by a
/// Fitting-style search. Throws CapExceeded when undecidable within budget.
std::vector<Matrix> idempotents_of_end(const ModulePtr& m,
                                       std::size_t cap = 1u << 20);

/// One nontrivial idempotent endomorphism, or nullopt when the module is
/// indecomposable. Throws CapExceeded when undecidable within budget.
std::optional<Matrix> splitting_idempotent(const ModulePtr& m,
                                           std::size_t cap = 1u << 20);

bool is_indecomposable(const ModulePtr& m, std::size_t cap = 1u << 20);

struct Summand {
  ModulePtr module;
  std::size_t multiplicity;
};

/// Krull-Schmidt decomposition into pairwise non-isomorphic indecomposables.
std::vector<Summand> indecompose(const ModulePtr& m, std::size_t cap = 1u << 20);

/// Pairwise non-isomorphic indecomposable projectives, one per primitive
/// block of the idempotent system.
std::vector<ModulePtr> projectives(const AlgebraPtr& a);
/// Duals of the right projectives, contragredient action.
std::vector<ModulePtr> injectives(const AlgebraPtr& a);
/// Tops of the indecomposable projectives.
std::vector<ModulePtr> simples(const AlgebraPtr& a);

bool is_projective(const ModulePtr& m);

/// Surjection P -> m with P projective of minimal dimension (kernel lies in
/// rad P).
ModuleMap projective_cover(const ModulePtr& m);

/// Radical submodule rad(A)m with its inclusion.
SubquotientResult radical_submodule(const ModulePtr& m);

/// Complete list of isomorphism classes of indecomposables of dimension at
/// most max_dim, canonically ordered. Requires a finite field and a basic
/// idempotent system (span of idempotents plus the radical is everything).
std::vector<ModulePtr> enumerate_indecomposables(const AlgebraPtr& a,
                                                 std::size_t max_dim,
                                                 std::size_t budget = 1u << 22);

}  // namespace cotor
