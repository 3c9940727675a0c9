#pragma once

#include "cotor/module.hpp"

namespace cotor {

/// Vector-space dual as a left module over the opposite algebra
/// (contragredient action: transpose of each action matrix).
ModulePtr dual_module(const ModulePtr& m);

/// The right-module structure of a bimodule, as a left module over the
/// opposite of its right algebra.
ModulePtr right_structure(const Bimodule& b);

/// Minimal projective resolution: each step is a projective cover of the
/// previous syzygy. terms[0] surjects onto the target via `augmentation`;
/// differentials[i] maps terms[i+1] -> terms[i]. `complete` is true when a
/// syzygy vanished within the requested length.
struct ProjectiveResolution {
  ModulePtr target;
  std::vector<ModulePtr> terms;
  std::vector<ModuleMap> differentials;
  std::optional<ModuleMap> augmentation;  // absent for the zero module
  bool complete = false;
};

ProjectiveResolution projective_resolution(const ModulePtr& m,
                                           std::size_t length);

/// Projective dimension when it is at most `bound`, otherwise nullopt.
std::optional<std::size_t> projective_dimension(const ModulePtr& m,
                                                std::size_t bound);

/// dim Ext^degree(m, n), computed from a projective resolution of m.
std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t degree);

/// Independent oracle: the same number computed from a projective
/// resolution of the dual of n over the opposite algebra (equivalently, an
/// injective coresolution of n).
std::size_t ext_dim_via_duals(const ModulePtr& m, const ModulePtr& n,
                              std::size_t degree);

/// Degree-1 extension class. The cocycle lives on the first syzygy term of
/// the minimal resolution of `source` and is stored reduced modulo
/// coboundaries, so operator== decides equality of classes.
struct ExtClass {
  ModulePtr source;
  ModulePtr target;
  Matrix cocycle;  // target.dim x P1.dim, canonical coset representative

  bool operator==(const ExtClass& o) const;
  bool is_zero() const { return cocycle.is_zero(); }
};

/// Canonicalize an arbitrary degree-1 cocycle.
ExtClass make_ext1(const ModulePtr& source, const ModulePtr& target,
                   const Matrix& cocycle);

/// Basis of Ext^1(source, target) as canonical classes.
std::vector<ExtClass> ext1_basis(const ModulePtr& source,
                                 const ModulePtr& target);

/// Short exact sequence 0 -> target -> E -> source -> 0 whose connecting
/// class is c (pushout of the syzygy sequence along the induced map).
ShortExactSequence ext1_to_ses(const ExtClass& c);

/// Connecting class of a short exact sequence 0 -> N -> E -> M -> 0 in
/// Ext^1(M, N).
ExtClass connecting_class(const ShortExactSequence& s);

/// x (B-A-bimodule) tensored over A with a left A-module: a left B-module.
ModulePtr tensor_over(const Bimodule& x, const ModulePtr& y);

/// Tensor together with the projection from, and a section into, the full
/// vector-space tensor product (row index convention: i * y_dim + j).
struct TensorModule {
  ModulePtr module;
  Matrix proj;
  Matrix lift;
};
TensorModule tensor_over_full(const Bimodule& x, const ModulePtr& y);

/// Functorial action of x tensor (-) on a map of left modules.
ModuleMap tensor_over_map(const Bimodule& x, const ModuleMap& f);

/// Tensor of a B-A-bimodule with an A-C-bimodule over A: a B-C-bimodule.
BimodulePtr tensor_bimodules(const Bimodule& x, const Bimodule& y);

/// dim Tor_degree^A(x, y): x a right A-module given as a left module over
/// the opposite algebra, y a left A-module; computed by resolving y.
/// Balance: tor_dim(y, x, degree) computes the same number by resolving x.
std::size_t tor_dim(const ModulePtr& x_right, const ModulePtr& y,
                    std::size_t degree);

/// Hom over the left algebra of b from b into y, as a left module over the
/// right algebra of b: (a.f)(v) = f(v.a).
ModulePtr hom_functor(const Bimodule& b, const ModulePtr& y);

/// Hom module together with the realizing basis of matrices b -> y.
struct HomModule {
  ModulePtr module;
  std::vector<Matrix> basis;
};
HomModule hom_functor_full(const Bimodule& b, const ModulePtr& y);

/// Functorial action of Hom(b, -) on a map of left modules.
ModuleMap hom_functor_map(const Bimodule& b, const ModuleMap& f);

struct SquareResult {
  ModulePtr module;
  ModuleMap leg1;
  ModuleMap leg2;
};

/// Fiber product of f: X -> Z and g: Y -> Z; legs project to X and Y.
SquareResult pullback(const ModuleMap& f, const ModuleMap& g);
/// Cofiber coproduct of f: W -> X and g: W -> Y; legs include X and Y.
SquareResult pushout(const ModuleMap& f, const ModuleMap& g);

}  // namespace cotor
