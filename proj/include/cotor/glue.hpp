#pragma once

#include "cotor/recollement.hpp"

namespace cotor {

struct UniverseMiss : Error {
  using Error::Error;
};

/// Desk-scale carrier of "for all X" quantifiers: a finite list of pairwise
/// non-isomorphic indecomposables that must contain every indecomposable
/// projective and injective of the algebra.
struct Universe {
  AlgebraPtr algebra;
  std::vector<ModulePtr> members;
  std::string provenance;
};
using UniversePtr = std::shared_ptr<const Universe>;

/// Enumerate all indecomposables up to max_dim (finite fields only).
UniversePtr enumerate_universe(const AlgebraPtr& a, std::size_t max_dim,
                               std::size_t budget = 1u << 22);
/// Wrap a user-supplied member list; validates the Universe invariants.
UniversePtr declare_universe(const AlgebraPtr& a,
                             std::vector<ModulePtr> members);

/// Index of the member isomorphic to m, if any.
std::optional<std::size_t> locate(const Universe& u, const ModulePtr& m);
/// Universe indices (with multiplicity) of the indecomposable summands of m.
/// Throws UniverseMiss when a summand has no isomorphic member.
std::vector<std::size_t> decompose_into(const Universe& u, const ModulePtr& m);

/// A full subcategory closed under finite direct sums and isomorphism,
/// cut out by a subset of universe members.
struct ModuleClass {
  UniversePtr universe;
  std::vector<std::size_t> indices;  // strictly increasing

  bool operator==(const ModuleClass& o) const {
    return universe == o.universe && indices == o.indices;
  }
};

ModuleClass make_class(const UniversePtr& u, std::vector<std::size_t> indices);
ModuleClass full_class(const UniversePtr& u);
ModuleClass empty_class(const UniversePtr& u);
/// The additive closure of the given modules inside the universe.
ModuleClass class_from_modules(const UniversePtr& u,
                               const std::vector<ModulePtr>& mods);

/// Whether every indecomposable summand of m lies in the class.
bool class_contains(const ModuleClass& c, const ModulePtr& m);

/// {X in universe : Ext^1(C, X) = 0 for every member C of c}.
ModuleClass right_perp(const ModuleClass& c);
/// {Y in universe : Ext^1(Y, D) = 0 for every member D of c}.
ModuleClass left_perp(const ModuleClass& c);

enum class TriState { yes, no, inconclusive };

struct CompletenessWitness {
  std::size_t member;      // universe index of the approximated module
  ShortExactSequence ses;  // 0 -> D -> C -> X -> 0 with C in c, D in d
};

struct SearchBudget {
  std::size_t dim_cap = 10;     // total dimension of candidate covers
  std::size_t mult_cap = 2;     // per-member multiplicity in a cover
  std::size_t enum_cap = 4096;  // full hom-space enumeration bound
};

struct CotorsionPairReport {
  bool is_pair = false;
  bool is_hereditary = false;
  TriState is_complete = TriState::inconclusive;
  std::vector<CompletenessWitness> witnesses;
  std::vector<std::string> failures;
};

/// Pair flag only: right_perp(c) == d and left_perp(d) == c, with
/// mismatch certificates on failure.
CotorsionPairReport is_cotorsion_pair(const ModuleClass& c,
                                      const ModuleClass& d);

/// Ext^2(C, D) = 0 over all member pairs, cross-checked against closure of
/// c under kernels of epimorphisms and of d under cokernels of
/// monomorphisms on probe sequences. Pre: (c, d) is a cotorsion pair.
bool is_hereditary(const ModuleClass& c, const ModuleClass& d);

/// Special-precover search: for each universe member X, a short exact
/// sequence 0 -> D -> C -> X -> 0 with C a bounded sum of c-members and D
/// in add(d). Exhausted budgets yield inconclusive, never a refutation.
std::pair<TriState, std::vector<CompletenessWitness>> is_complete(
    const ModuleClass& c, const ModuleClass& d, const SearchBudget& budget);

/// Everything is_cotorsion_pair/is_hereditary/is_complete report, bundled.
CotorsionPairReport full_pair_report(const ModuleClass& c,
                                     const ModuleClass& d,
                                     const SearchBudget& budget);

/// A recollement together with candidate pairs on its outer algebras and
/// universes over all three algebras.
struct GluedScenario {
  std::shared_ptr<const Recollement> rec;
  UniversePtr ambient;  // over rec->lambda()
  UniversePtr side;     // over rec->quotient()
  UniversePtr corner;   // over rec->corner()
  ModuleClass u_prime, v_prime;    // over `side`
  ModuleClass u_dprime, v_dprime;  // over `corner`
};

std::vector<std::string> validate_scenario(const GluedScenario& s);

/// {X : i^! X in v_prime, j^* X in v_dprime, first right-derived i^! = 0}.
ModuleClass glued_N(const GluedScenario& s);
/// {X : i^* X in u_prime, j^* X in u_dprime, first left-derived i^* = 0}.
ModuleClass glued_M(const GluedScenario& s);

struct AuxiliaryClasses {
  ModuleClass c_class;  // additive closure of i_*(U') and j_!(U'')
  ModuleClass d_class;  // additive closure of i_*(V') and j_*(V'')
};
AuxiliaryClasses auxiliary_classes(const GluedScenario& s);

struct PerpTransportReport {
  bool clause1_applicable = false;  // L1 j_!(U'') = 0 and side projectives in U'
  bool clause1_holds = false;       // right_perp(C) equals the glued N of the perps
  bool clause2_applicable = false;  // R1 j_*(V'') = 0 and side injectives in V'
  bool clause2_holds = false;       // left_perp(D) equals the glued M of the perps
};
PerpTransportReport check_perp_transport(const GluedScenario& s);

struct GluingReport {
  // hypothesis panel
  bool condition_p = false;
  bool vanish_l1_shriek_u = false;       // L1 j_! on U''
  bool vanish_r1_star_v = false;         // R1 j_* on V''
  bool vanish_l1_shriek_perp_v = false;  // L1 j_! on left_perp(V'')
  bool vanish_r1_star_u_perp = false;    // R1 j_* on right_perp(U'')
  bool side_pairs_ok = false;            // both outer pairs are cotorsion pairs

  ModuleClass glued_m, glued_n;

  struct Entry {
    bool asserted = false;  // hypotheses held, so the conclusion was checked
    TriState status = TriState::inconclusive;
    std::string note;
  };
  Entry one_sided_n;       // (left_perp(N), N) is a cotorsion pair
  Entry one_sided_m;       // (M, right_perp(M)) is a cotorsion pair
  Entry pairs_agree;       // the two one-sided pairs coincide: (M, N)
  Entry glued_is_pair;     // (M, N) is a cotorsion pair
  Entry heredity_forward;  // side pairs hereditary => glued hereditary
  Entry heredity_backward; // glued hereditary => side pairs hereditary
  Entry completeness;      // sides complete hereditary => glued complete
  Entry converse_pairs;    // glued pair => side pairs (distinct hypotheses)
  Entry converse_complete; // glued complete hereditary => sides, gated
  std::vector<std::string> notes;
};

GluingReport verify_gluing(const GluedScenario& s, const SearchBudget& budget);

}  // namespace cotor
