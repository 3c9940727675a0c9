#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cotor/matrix.hpp"

namespace cotor {

struct NotIdempotent : Error {
  using Error::Error;
};
struct NotAnIdeal : Error {
  using Error::Error;
};
struct InfiniteDimensional : Error {
  using Error::Error;
};

using Vec = std::vector<Scalar>;

struct Quiver {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::string label;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

/// A path written in right-to-left composition order: arrows.front() is
/// applied last. The empty path is the trivial path at `vertex`.
struct Path {
  std::vector<std::size_t> arrows;
  std::size_t vertex = 0;  // used only when arrows is empty
};

/// One summand of a relation: coeff * path.
struct PathTerm {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<PathTerm>;

/// Finite-dimensional associative unital algebra given by structure
/// constants, with a distinguished complete orthogonal idempotent system.
/// Instances are immutable after construction and shared by pointer.
class Algebra {
 public:
  Algebra(Field f, std::vector<std::string> labels,
          std::vector<std::vector<Vec>> struct_consts, Vec unit,
          std::vector<Vec> idempotents);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& idempotents() const { return idempotents_; }
  /// Coordinates of basis_i * basis_j.
  const Vec& sc(std::size_t i, std::size_t j) const { return sc_[i][j]; }

  Vec mult(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;
  Matrix right_mult(const Vec& x) const;
  Vec basis_vec(std::size_t i) const;
  bool is_idempotent(const Vec& e) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> sc_;
  Vec unit_;
  std::vector<Vec> idempotents_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraElement {
  AlgebraPtr algebra;
  Vec coords;
};

/// Empty iff all Algebra invariants hold; entries name offending triples.
std::vector<std::string> validate_algebra(const Algebra& a);

/// Path algebra of q modulo the given relations. Idempotents are the
/// trivial paths, one per vertex. Throws InfiniteDimensional when the
/// path basis does not terminate under the length cap.
AlgebraPtr path_algebra(const Quiver& q, const std::vector<Relation>& relations,
                        Field f, std::size_t length_cap = 64);

struct CornerResult {
  AlgebraPtr corner;
  /// Columns are the corner basis vectors in ambient coordinates.
  Matrix embedding;
};
CornerResult corner_algebra(const AlgebraPtr& a, const Vec& e);

/// Basis of the two-sided ideal generated by x.
std::vector<Vec> two_sided_ideal_basis(const Algebra& a, const Vec& x);

struct QuotientResult {
  AlgebraPtr quotient;
  /// Maps ambient coordinates to quotient coordinates.
  Matrix projection;
  /// Columns are representatives of the quotient basis in ambient coords.
  Matrix section;
};
QuotientResult quotient_algebra(const AlgebraPtr& a,
                                const std::vector<Vec>& ideal_basis);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

/// Basis of the Jacobson radical. Trace-form kernel over the rationals;
/// joint annihilator of the composition factors of the regular module
/// over a prime field.
std::vector<Vec> radical_basis(const Algebra& a);

}  // namespace cotor
