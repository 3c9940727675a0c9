#include "cotor/homological.hpp"

#include <algorithm>
#include <functional>

namespace cotor {

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
  return m;
}

/// Coordinates of m in the span of `basis` (throws NoSolution otherwise).
Vec coords_in(const Field& f, const std::vector<Matrix>& basis, const Matrix& m) {
  if (basis.empty()) {
    if (!m.is_zero()) throw NoSolution("matrix outside empty basis");
    return {};
  }
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  Matrix cols = Matrix::from_cols(f, basis[0].rows() * basis[0].cols(), flat);
  return solve(cols, flatten(m));
}

/// Matrix of f -> f o d from Hom(P, n) to Hom(Q, n), where d: Q -> P.
Matrix hom_restriction(const Field& f, const std::vector<Matrix>& hp,
                       const std::vector<Matrix>& hq, const Matrix& d) {
  Matrix out(f, hq.size(), hp.size());
  for (std::size_t j = 0; j < hp.size(); ++j) {
    Vec c = coords_in(f, hq, hp[j] * d);
    for (std::size_t i = 0; i < hq.size(); ++i) out.at(i, j) = c[i];
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t ip = 0; ip < a.cols(); ++ip) {
      if (f.is_zero(a.at(i, ip))) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t jp = 0; jp < b.cols(); ++jp)
          out.at(i * b.rows() + j, ip * b.cols() + jp) =
              f.mul(a.at(i, ip), b.at(j, jp));
    }
  return out;
}

/// Quotient of F^(xdim*ydim) by the balancing relations of a tensor
/// product over the algebra with actions xact (right, via opposite) and
/// yact (left).
struct TensorSpace {
  std::size_t dim;
  Matrix proj;  // full -> quotient
  Matrix lift;  // quotient -> full (coordinate section)
};

TensorSpace tensor_space(const Field& f, std::size_t mid_dim,
                         const std::function<const Matrix&(std::size_t)>& xact,
                         const std::function<const Matrix&(std::size_t)>& yact,
                         std::size_t xdim, std::size_t ydim) {
  std::size_t full = xdim * ydim;
  std::vector<Vec> rels;
  for (std::size_t k = 0; k < mid_dim; ++k) {
    const Matrix& xa = xact(k);
    const Matrix& ya = yact(k);
    for (std::size_t i = 0; i < xdim; ++i)
      for (std::size_t j = 0; j < ydim; ++j) {
        Vec v(full, f.zero());
        for (std::size_t ip = 0; ip < xdim; ++ip)
          v[ip * ydim + j] = f.add(v[ip * ydim + j], xa.at(ip, i));
        for (std::size_t jp = 0; jp < ydim; ++jp)
          v[i * ydim + jp] = f.sub(v[i * ydim + jp], ya.at(jp, j));
        rels.push_back(std::move(v));
      }
  }
  SpanReducer red(f, full, rels);
  std::size_t q = red.quotient_dim();
  Matrix proj(f, q, full);
  for (std::size_t j = 0; j < full; ++j) {
    Vec e(full, f.zero());
    e[j] = f.one();
    Vec qc = red.quotient_coords(e);
    for (std::size_t i = 0; i < q; ++i) proj.at(i, j) = qc[i];
  }
  Matrix lift(f, full, q);
  for (std::size_t i = 0; i < q; ++i) lift.at(red.free_index(i), i) = f.one();
  return {q, std::move(proj), std::move(lift)};
}

}  // namespace

ModulePtr dual_module(const ModulePtr& m) {
  AlgebraPtr op = opposite_algebra(m->algebra());
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < op->dim(); ++k)
    action.push_back(m->action(k).transpose());
  return std::make_shared<Module>(op, std::move(action));
}

ModulePtr right_structure(const Bimodule& b) {
  AlgebraPtr op = opposite_algebra(b.right_algebra());
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < op->dim(); ++k) action.push_back(b.right_action(k));
  return std::make_shared<Module>(op, std::move(action));
}

ProjectiveResolution projective_resolution(const ModulePtr& m,
                                           std::size_t length) {
  ProjectiveResolution res;
  res.target = m;
  if (m->dim() == 0) {
    res.complete = true;
    return res;
  }
  ModuleMap aug = projective_cover(m);
  res.terms.push_back(aug.source);
  res.augmentation = aug;
  auto syz = kernel(aug);
  while (res.terms.size() < length + 1 && syz.module->dim() > 0) {
    ModuleMap cover = projective_cover(syz.module);
    res.terms.push_back(cover.source);
    res.differentials.push_back(compose(syz.map, cover));
    syz = kernel(cover);
  }
  res.complete = syz.module->dim() == 0;
  return res;
}

std::optional<std::size_t> projective_dimension(const ModulePtr& m,
                                                std::size_t bound) {
  auto res = projective_resolution(m, bound);
  if (!res.complete) return std::nullopt;
  if (res.terms.empty()) return 0;  // zero module
  return res.terms.size() - 1;
}

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t degree) {
  if (m->dim() == 0 || n->dim() == 0) return 0;
  const Field& f = m->field();
  if (degree == 0) return hom_space(*m, *n).size();
  auto res = projective_resolution(m, degree + 1);
  if (res.terms.size() <= degree) return 0;
  auto hd = hom_space(*res.terms[degree], *n);
  if (hd.empty()) return 0;
  std::size_t ker_dim = hd.size();
  if (res.terms.size() > degree + 1) {
    auto hnext = hom_space(*res.terms[degree + 1], *n);
    Matrix delta =
        hom_restriction(f, hd, hnext, res.differentials[degree].mat);
    ker_dim = hd.size() - rank(delta);
  }
  auto hprev = hom_space(*res.terms[degree - 1], *n);
  Matrix delta_prev =
      hom_restriction(f, hprev, hd, res.differentials[degree - 1].mat);
  return ker_dim - rank(delta_prev);
}

std::size_t ext_dim_via_duals(const ModulePtr& m, const ModulePtr& n,
                              std::size_t degree) {
  return ext_dim(dual_module(n), dual_module(m), degree);
}

namespace {

/// Coboundary span (flattened) for degree-1 classes on the minimal
/// resolution of `source`.
std::vector<Vec> coboundary_flats(const ProjectiveResolution& res,
                                  const ModulePtr& target) {
  std::vector<Vec> flats;
  if (res.terms.size() < 2) return flats;
  auto h0 = hom_space(*res.terms[0], *target);
  for (const auto& g : h0) flats.push_back(flatten(g * res.differentials[0].mat));
  return flats;
}

}  // namespace

bool ExtClass::operator==(const ExtClass& o) const {
  return source == o.source && target == o.target && cocycle == o.cocycle;
}

ExtClass make_ext1(const ModulePtr& source, const ModulePtr& target,
                   const Matrix& cocycle) {
  const Field& f = source->field();
  auto res = projective_resolution(source, 2);
  if (res.terms.size() < 2) {
    if (!(cocycle.rows() == target->dim() && cocycle.cols() == 0))
      throw Error("cocycle shape mismatch for projective source");
    return {source, target, cocycle};
  }
  const ModulePtr& p1 = res.terms[1];
  if (cocycle.rows() != target->dim() || cocycle.cols() != p1->dim())
    throw Error("cocycle shape mismatch");
  if (!validate_map(ModuleMap(p1, target, cocycle)).empty())
    throw Error("cocycle is not a module map");
  if (res.terms.size() > 2 && !(cocycle * res.differentials[1].mat).is_zero())
    throw Error("cocycle does not vanish on the next syzygy");
  SpanReducer red(f, target->dim() * p1->dim(), coboundary_flats(res, target));
  Matrix canon = unflatten(f, target->dim(), p1->dim(), red.reduce(flatten(cocycle)));
  return {source, target, canon};
}

std::vector<ExtClass> ext1_basis(const ModulePtr& source,
                                 const ModulePtr& target) {
  const Field& f = source->field();
  auto res = projective_resolution(source, 2);
  if (res.terms.size() < 2 || target->dim() == 0) return {};
  const ModulePtr& p1 = res.terms[1];
  auto h1 = hom_space(*p1, *target);
  // cocycles: kill the image of the next differential
  std::vector<Matrix> cocycles;
  if (res.terms.size() > 2) {
    const Matrix& d2 = res.differentials[1].mat;
    std::vector<Vec> rows;
    for (const auto& h : h1) rows.push_back(flatten(h * d2));
    Matrix sys = Matrix::from_rows(f, rows.empty() ? 0 : rows[0].size(), rows);
    for (const auto& c : kernel_basis(sys.transpose())) {
      Matrix z = Matrix::zero(f, target->dim(), p1->dim());
      for (std::size_t i = 0; i < h1.size(); ++i)
        if (!f.is_zero(c[i])) z = z + h1[i].scaled(c[i]);
      cocycles.push_back(std::move(z));
    }
  } else {
    cocycles = h1;
  }
  SpanReducer red(f, target->dim() * p1->dim(), coboundary_flats(res, target));
  std::vector<ExtClass> out;
  std::vector<Vec> picked;
  for (const auto& z : cocycles) {
    Vec r = red.reduce(flatten(z));
    std::vector<Vec> trial = picked;
    trial.push_back(r);
    if (span_basis(f, r.size(), trial).size() > picked.size()) {
      picked = std::move(trial);
      out.push_back(
          {source, target, unflatten(f, target->dim(), p1->dim(), r)});
    }
  }
  return out;
}

ShortExactSequence ext1_to_ses(const ExtClass& c) {
  const ModulePtr& m = c.source;
  const ModulePtr& n = c.target;
  const AlgebraPtr& a = m->algebra();
  const Field& f = m->field();
  auto res = projective_resolution(m, 1);
  const ModuleMap& aug = *res.augmentation;
  auto syz = kernel(aug);  // iota: K -> P0
  // induced map K -> n through the cocycle on P1
  Matrix cbar = Matrix::zero(f, n->dim(), syz.module->dim());
  if (res.terms.size() >= 2) {
    const Matrix& d1 = res.differentials[0].mat;
    for (std::size_t j = 0; j < syz.module->dim(); ++j) {
      Vec x = solve(d1, syz.map.mat.col_vec(j));
      Vec y = c.cocycle.apply(x);
      for (std::size_t i = 0; i < n->dim(); ++i) cbar.at(i, j) = y[i];
    }
  }
  // pushout: E = (n + P0) / { (cbar k, -iota k) }
  auto sum = direct_sum(a, {n, res.terms[0]});
  Matrix w = Matrix::vstack(cbar, syz.map.mat.scaled(f.neg(f.one())));
  ModuleMap wmap(syz.module, sum.module, std::move(w));
  auto coker = cokernel(wmap);
  ModuleMap incl = compose(coker.map, sum.injections[0]);
  // projection E -> m determined by q . proj = aug . pr_{P0}
  Matrix big = aug.mat * sum.projections[1].mat;
  Matrix s =
      solve_matrix(coker.map.mat.transpose(), big.transpose()).transpose();
  ModuleMap proj(coker.module, m, std::move(s));
  return {incl, proj};
}

ExtClass connecting_class(const ShortExactSequence& s) {
  const ModulePtr& m = s.projection.target;
  const ModulePtr& n = s.inclusion.source;
  const ModulePtr& e = s.projection.source;
  const Field& f = m->field();
  auto res = projective_resolution(m, 1);
  const ModuleMap& aug = *res.augmentation;
  if (res.terms.size() < 2)
    return make_ext1(m, n, Matrix::zero(f, n->dim(), 0));
  // lift the augmentation through the projection
  auto h = hom_space(*res.terms[0], *e);
  std::vector<Vec> cols;
  for (const auto& hi : h) cols.push_back(flatten(s.projection.mat * hi));
  Matrix sys = Matrix::from_cols(f, m->dim() * res.terms[0]->dim(), cols);
  Vec coeff = solve(sys, flatten(aug.mat));
  Matrix lift = Matrix::zero(f, e->dim(), res.terms[0]->dim());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!f.is_zero(coeff[i])) lift = lift + h[i].scaled(coeff[i]);
  // restrict to the syzygy and pull back through the inclusion
  Matrix ld = lift * res.differentials[0].mat;
  Matrix coc = solve_matrix(s.inclusion.mat, ld);
  return make_ext1(m, n, coc);
}

TensorModule tensor_over_full(const Bimodule& x, const ModulePtr& y) {
  if (y->algebra() != x.right_algebra())
    throw Error("tensor: middle algebras do not match");
  const Field& f = x.left_algebra()->field();
  const AlgebraPtr& mid = x.right_algebra();
  TensorSpace ts = tensor_space(
      f, mid->dim(), [&](std::size_t k) -> const Matrix& { return x.right_action(k); },
      [&](std::size_t k) -> const Matrix& { return y->action(k); }, x.dim(),
      y->dim());
  const AlgebraPtr& left = x.left_algebra();
  std::vector<Matrix> action;
  Matrix idy = Matrix::identity(f, y->dim());
  for (std::size_t k = 0; k < left->dim(); ++k)
    action.push_back(ts.proj * kron(x.left_action(k), idy) * ts.lift);
  return {std::make_shared<Module>(left, std::move(action)), std::move(ts.proj),
          std::move(ts.lift)};
}

ModulePtr tensor_over(const Bimodule& x, const ModulePtr& y) {
  return tensor_over_full(x, y).module;
}

ModuleMap tensor_over_map(const Bimodule& x, const ModuleMap& f) {
  TensorModule src = tensor_over_full(x, f.source);
  TensorModule tgt = tensor_over_full(x, f.target);
  Matrix idx = Matrix::identity(f.source->field(), x.dim());
  Matrix m = tgt.proj * kron(idx, f.mat) * src.lift;
  return ModuleMap(src.module, tgt.module, std::move(m));
}

BimodulePtr tensor_bimodules(const Bimodule& x, const Bimodule& y) {
  if (y.left_algebra() != x.right_algebra())
    throw Error("tensor: middle algebras do not match");
  const Field& f = x.left_algebra()->field();
  const AlgebraPtr& mid = x.right_algebra();
  TensorSpace ts = tensor_space(
      f, mid->dim(), [&](std::size_t k) -> const Matrix& { return x.right_action(k); },
      [&](std::size_t k) -> const Matrix& { return y.left_action(k); }, x.dim(),
      y.dim());
  Matrix idx = Matrix::identity(f, x.dim());
  Matrix idy = Matrix::identity(f, y.dim());
  std::vector<Matrix> la, ra;
  for (std::size_t k = 0; k < x.left_algebra()->dim(); ++k)
    la.push_back(ts.proj * kron(x.left_action(k), idy) * ts.lift);
  for (std::size_t k = 0; k < y.right_algebra()->dim(); ++k)
    ra.push_back(ts.proj * kron(idx, y.right_action(k)) * ts.lift);
  return std::make_shared<Bimodule>(x.left_algebra(), y.right_algebra(),
                                    std::move(la), std::move(ra));
}

std::size_t tor_dim(const ModulePtr& x_right, const ModulePtr& y,
                    std::size_t degree) {
  const AlgebraPtr& a = y->algebra();
  if (x_right->algebra() != opposite_algebra(a))
    throw Error("tor: first argument must be a right module over the same algebra");
  if (x_right->dim() == 0 || y->dim() == 0) return 0;
  const Field& f = y->field();
  auto res = projective_resolution(y, degree + 1);
  if (res.terms.size() <= degree) return 0;
  auto tensor_of = [&](const ModulePtr& p) {
    return tensor_space(
        f, a->dim(),
        [&](std::size_t k) -> const Matrix& { return x_right->action(k); },
        [&](std::size_t k) -> const Matrix& { return p->action(k); },
        x_right->dim(), p->dim());
  };
  Matrix idx = Matrix::identity(f, x_right->dim());
  TensorSpace td = tensor_of(res.terms[degree]);
  std::size_t dim_d = td.dim;
  std::size_t rank_out = 0, rank_in = 0;
  if (degree > 0) {
    TensorSpace tprev = tensor_of(res.terms[degree - 1]);
    Matrix bd = tprev.proj * kron(idx, res.differentials[degree - 1].mat) * td.lift;
    rank_out = rank(bd);
  }
  if (res.terms.size() > degree + 1) {
    TensorSpace tnext = tensor_of(res.terms[degree + 1]);
    Matrix bd = td.proj * kron(idx, res.differentials[degree].mat) * tnext.lift;
    rank_in = rank(bd);
  }
  return dim_d - rank_out - rank_in;
}

HomModule hom_functor_full(const Bimodule& b, const ModulePtr& y) {
  if (y->algebra() != b.left_algebra())
    throw Error("hom functor: argument must live over the left algebra");
  const Field& f = y->field();
  auto h = hom_space(*b.as_left_module(), *y);
  const AlgebraPtr& r = b.right_algebra();
  std::size_t d = h.size();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < r->dim(); ++k) {
    Matrix act(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = coords_in(f, h, h[j] * b.right_action(k));
      for (std::size_t i = 0; i < d; ++i) act.at(i, j) = c[i];
    }
    action.push_back(std::move(act));
  }
  return {std::make_shared<Module>(r, std::move(action)), std::move(h)};
}

ModulePtr hom_functor(const Bimodule& b, const ModulePtr& y) {
  return hom_functor_full(b, y).module;
}

ModuleMap hom_functor_map(const Bimodule& b, const ModuleMap& f) {
  HomModule src = hom_functor_full(b, f.source);
  HomModule tgt = hom_functor_full(b, f.target);
  const Field& fld = f.source->field();
  Matrix m(fld, tgt.basis.size(), src.basis.size());
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    Vec c = coords_in(fld, tgt.basis, f.mat * src.basis[j]);
    for (std::size_t i = 0; i < tgt.basis.size(); ++i) m.at(i, j) = c[i];
  }
  return ModuleMap(src.module, tgt.module, std::move(m));
}

SquareResult pullback(const ModuleMap& f, const ModuleMap& g) {
  if (f.target != g.target) throw Error("pullback needs a common target");
  const AlgebraPtr& a = f.source->algebra();
  const Field& fld = f.source->field();
  auto sum = direct_sum(a, {f.source, g.source});
  Matrix big = Matrix::hstack(f.mat, g.mat.scaled(fld.neg(fld.one())));
  ModuleMap diff(sum.module, f.target, std::move(big));
  auto k = kernel(diff);
  return {k.module, compose(sum.projections[0], k.map),
          compose(sum.projections[1], k.map)};
}

SquareResult pushout(const ModuleMap& f, const ModuleMap& g) {
  if (f.source != g.source) throw Error("pushout needs a common source");
  const AlgebraPtr& a = f.target->algebra();
  const Field& fld = f.target->field();
  auto sum = direct_sum(a, {f.target, g.target});
  Matrix big =
      Matrix::vstack(f.mat, g.mat.scaled(fld.neg(fld.one())));
  ModuleMap diff(f.source, sum.module, std::move(big));
  auto c = cokernel(diff);
  return {c.module, compose(c.map, sum.injections[0]),
          compose(c.map, sum.injections[1])};
}

}  // namespace cotor
