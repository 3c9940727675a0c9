#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cotor/field.hpp"

namespace cotor {

struct NoSolution : Error {
  using Error::Error;
};

/// Dense row-major matrix over a fixed field. Immutable in spirit: the
/// mutating entry accessor exists for construction code only.
class Matrix {
 public:
  /// Empty 0 x 0 placeholder, for aggregate members filled in later.
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix zero(Field f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }
  /// Row-major integer initializer, entries reduced into the field.
  static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& vals);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  Matrix row(std::size_t r) const;
  Matrix col(std::size_t c) const;
  std::vector<Scalar> row_vec(std::size_t r) const;
  std::vector<Scalar> col_vec(std::size_t c) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                   std::size_t nc) const;

  /// Stack vertically / horizontally.
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(Field f, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_cols(Field f, std::size_t rows,
                          const std::vector<std::vector<Scalar>>& cols);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, as column vectors.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Canonical solution of m x = b (free variables set to zero).
/// Throws NoSolution when b is not in the column space.
std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Solve m X = B column by column.
Matrix solve_matrix(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Row-space basis (nonzero rows of the rref).
std::vector<std::vector<Scalar>> row_space_basis(const Matrix& m);

/// True if the row space of `sub` is contained in the row space of `space`.
bool row_space_contains(const Matrix& space, const Matrix& sub);

/// Row-reduced span with a fixed column permutation; supports reduction of
/// vectors modulo the span and extraction of complement coordinates.
class SpanReducer {
 public:
  SpanReducer(Field f, std::size_t ambient_dim,
              const std::vector<std::vector<Scalar>>& gens,
              std::vector<std::size_t> col_order = {});

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t span_dim() const { return pivots_.size(); }
  std::size_t quotient_dim() const { return free_cols_.size(); }

  /// v minus its pivot-elimination against the span; result has zero
  /// entries in all pivot coordinates.
  std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;

  bool contains(const std::vector<Scalar>& v) const;

  /// Coordinates of (v mod span) with respect to the complement basis
  /// given by the non-pivot coordinate directions.
  std::vector<Scalar> quotient_coords(const std::vector<Scalar>& v) const;

  /// Ambient index of the i-th complement coordinate.
  std::size_t free_index(std::size_t i) const { return order_[free_cols_[i]]; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Scalar>> rref_rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_cols_;
};

/// Basis of the span of `gens` inside F^dim (rref row form).
std::vector<std::vector<Scalar>> span_basis(
    Field f, std::size_t dim, const std::vector<std::vector<Scalar>>& gens);

}  // namespace cotor
