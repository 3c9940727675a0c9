#include "cotor/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cotor {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& vals) {
  if (vals.size() != rows * cols) throw Error("entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < vals.size(); ++i)
    m.entries_[i] = f.from_int(vals[i]);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e.num != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (field_.is_zero(b)) continue;
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = field_.add(entries_[i], o.entries_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  return *this + o.scaled(field_.from_int(-1));
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = field_.mul(entries_[i], s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw Error("vector length mismatch");
  std::vector<Scalar> r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
  return r;
}

Matrix Matrix::row(std::size_t r) const { return submatrix(r, 0, 1, cols_); }
Matrix Matrix::col(std::size_t c) const { return submatrix(0, c, rows_, 1); }

std::vector<Scalar> Matrix::row_vec(std::size_t r) const {
  std::vector<Scalar> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

std::vector<Scalar> Matrix::col_vec(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("submatrix out of range");
  Matrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("vstack width mismatch");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack height mismatch");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::from_rows(Field f, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
  Matrix r(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = rows[i][j];
  }
  return r;
}

Matrix Matrix::from_cols(Field f, std::size_t rows,
                         const std::vector<std::vector<Scalar>>& cols) {
  Matrix r(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << field_.to_string(at(i, j));
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!f.is_zero(a.at(i, c))) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar invp = f.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j)
      a.at(r, j) = f.mul(a.at(r, j), invp);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = f.neg(rr.mat.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw Error("rhs length mismatch");
  const Field& f = m.field();
  Matrix aug = Matrix::hstack(m, Matrix::from_cols(f, m.rows(), {b}));
  RrefResult rr = rref(aug);
  // Inconsistent iff the augmented column is a pivot.
  for (auto p : rr.pivots)
    if (p == m.cols()) throw NoSolution("right-hand side not in column space");
  std::vector<Scalar> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x[rr.pivots[i]] = rr.mat.at(i, m.cols());
  return x;
}

Matrix solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error("rhs shape mismatch");
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(solve(m, b.col_vec(j)));
  return Matrix::from_cols(m.field(), m.cols(), cols);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_matrix(m, Matrix::identity(m.field(), m.rows()));
}

std::vector<std::vector<Scalar>> row_space_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) rows.push_back(rr.mat.row_vec(i));
  return rows;
}

bool row_space_contains(const Matrix& space, const Matrix& sub) {
  if (space.cols() != sub.cols()) throw Error("ambient dimension mismatch");
  return rank(space) == rank(Matrix::vstack(space, sub));
}

SpanReducer::SpanReducer(Field f, std::size_t ambient_dim,
                         const std::vector<std::vector<Scalar>>& gens,
                         std::vector<std::size_t> col_order)
    : field_(f), ambient_(ambient_dim), order_(std::move(col_order)) {
  if (order_.empty()) {
    order_.resize(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) order_[i] = i;
  }
  Matrix rows(f, gens.size(), ambient_);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) rows.at(i, j) = gens[i][order_[j]];
  RrefResult rr = rref(rows);
  pivots_ = rr.pivots;
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    rref_rows_.push_back(rr.mat.row_vec(i));
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) free_cols_.push_back(j);
}

std::vector<Scalar> SpanReducer::reduce(const std::vector<Scalar>& v) const {
  std::vector<Scalar> w(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) w[j] = v[order_[j]];
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = w[pivots_[i]];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] = field_.sub(w[j], field_.mul(c, rref_rows_[i][j]));
  }
  std::vector<Scalar> out(ambient_, field_.zero());
  for (std::size_t j = 0; j < ambient_; ++j) out[order_[j]] = w[j];
  return out;
}

bool SpanReducer::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [&](const Scalar& s) { return field_.is_zero(s); });
}

std::vector<Scalar> SpanReducer::quotient_coords(
    const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  std::vector<Scalar> q(free_cols_.size());
  for (std::size_t i = 0; i < free_cols_.size(); ++i)
    q[i] = r[order_[free_cols_[i]]];
  return q;
}

std::vector<std::vector<Scalar>> span_basis(
    Field f, std::size_t dim, const std::vector<std::vector<Scalar>>& gens) {
  Matrix rows(f, gens.size(), dim);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) rows.at(i, j) = gens[i][j];
  return row_space_basis(rows);
}

}  // namespace cotor
