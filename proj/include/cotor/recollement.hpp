#pragma once

#include "cotor/homological.hpp"

namespace cotor {

struct WrongCategory : Error {
  using Error::Error;
};

enum class FunctorTag {
  i_star_upper,   // quotient-side left adjoint (tensor with Lambda/LeL)
  i_lower,        // inflation along the quotient projection
  i_shriek,       // Hom(Lambda/LeL, -)
  j_lower_shriek, // Lambda e tensor over the corner
  j_star,         // multiply by e (restriction to the corner)
  j_upper_star    // Hom over the corner from e Lambda
};

enum class DerivedTag { L1_i_star, R1_i_shriek, L1_j_shriek, R1_j_star };

/// The standard recollement of module categories induced by an idempotent:
/// quotient algebra modules on the left, corner algebra modules on the
/// right of the ambient category.
class Recollement {
 public:
  Recollement(AlgebraPtr lambda, Vec e);

  const AlgebraPtr& lambda() const { return lambda_; }
  const Vec& e() const { return e_; }
  const AlgebraPtr& corner() const { return corner_; }
  const AlgebraPtr& quotient() const { return quotient_; }
  const Bimodule& lambda_e() const { return *lambda_e_; }
  const Bimodule& e_lambda() const { return *e_lambda_; }
  /// Lambda/LeL as a Lambda-quotient bimodule (for Hom(Q, -)).
  const Bimodule& quot_lambda_side() const { return *quot_lq_; }
  /// Lambda/LeL as a quotient-Lambda bimodule (for Q tensor -).
  const Bimodule& quot_quotient_side() const { return *quot_ql_; }
  /// Columns are the basis of Lambda e (resp. e Lambda) inside Lambda.
  const Matrix& lambda_e_basis() const { return lambda_e_basis_; }
  const Matrix& e_lambda_basis() const { return e_lambda_basis_; }
  const Matrix& quotient_projection() const { return quot_proj_; }
  const Matrix& quotient_section() const { return quot_section_; }

  ModulePtr apply(FunctorTag t, const ModulePtr& m) const;
  ModuleMap apply(FunctorTag t, const ModuleMap& f) const;

  /// Counit of (j_!, j^*): the multiplication map j_! j^* m -> m.
  ModuleMap counit_eps(const ModulePtr& m) const;
  /// Unit of (j^*, j_*): m -> j_* j^* m.
  ModuleMap unit_delta(const ModulePtr& m) const;
  /// Counit of (i_*, i^!): evaluation i_* i^! m -> m.
  ModuleMap counit_iota(const ModulePtr& m) const;
  /// Unit of (i^*, i_*): m -> i_* i^* m.
  ModuleMap unit_kappa(const ModulePtr& m) const;

  /// Dimension of the first derived functor and its vanishing flag.
  std::pair<bool, std::size_t> derived_vanishes(DerivedTag t,
                                                const ModulePtr& m) const;

  struct ConditionPReport {
    bool holds = false;
    /// Kernel basis of the canonical map Lambda e (x) e Lambda -> Lambda
    /// when it fails (coordinates in the tensor quotient).
    std::vector<Vec> kernel_witness;
  };
  ConditionPReport condition_p() const;

  struct CanonicalSequences {
    // 0 -> i_*(M') -> j_! j^* m -> m -> i_* i^*(m) -> 0
    std::vector<ModuleMap> first;
    // 0 -> i_* i^!(m) -> m -> j_* j^* m -> i_*(N') -> 0
    std::vector<ModuleMap> second;
    ModulePtr m_prime;  // over the quotient algebra
    ModulePtr n_prime;  // over the quotient algebra
    bool first_exact = false;
    bool second_exact = false;
  };
  CanonicalSequences canonical_sequences(const ModulePtr& m) const;

  /// Exactness of i^* (resp. i^!), decided on the simple modules: first
  /// derived vanishing on every simple extends to all finite-dimensional
  /// modules along composition series.
  bool functor_exact(FunctorTag which) const;

 private:
  AlgebraPtr lambda_;
  Vec e_;
  AlgebraPtr corner_;
  AlgebraPtr quotient_;
  BimodulePtr lambda_e_, e_lambda_, quot_lq_, quot_ql_;
  Matrix lambda_e_basis_, e_lambda_basis_, quot_proj_, quot_section_;
  Matrix corner_embed_;

  void check_source(FunctorTag t, const AlgebraPtr& a) const;
  struct Restriction {
    ModulePtr module;
    Matrix basis;  // columns inside the ambient module
  };
  Restriction j_star_full(const ModulePtr& m) const;
};

/// Four-term exactness helper: maps f1: A->B, f2: B->C, f3: C->D with
/// f1 mono, f3 epi, im f1 = ker f2, im f2 = ker f3.
bool four_term_exact(const ModuleMap& f1, const ModuleMap& f2,
                     const ModuleMap& f3);

}  // namespace cotor
