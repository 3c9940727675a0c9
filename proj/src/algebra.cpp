#include "cotor/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace cotor {

Algebra::Algebra(Field f, std::vector<std::string> labels,
                 std::vector<std::vector<Vec>> struct_consts, Vec unit,
                 std::vector<Vec> idempotents)
    : field_(f),
      dim_(labels.size()),
      labels_(std::move(labels)),
      sc_(std::move(struct_consts)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
  if (sc_.size() != dim_ || unit_.size() != dim_)
    throw Error("algebra data dimension mismatch");
  for (const auto& row : sc_) {
    if (row.size() != dim_) throw Error("structure constant table ragged");
    for (const auto& v : row)
      if (v.size() != dim_) throw Error("structure constant vector length mismatch");
  }
  for (const auto& e : idempotents_)
    if (e.size() != dim_) throw Error("idempotent coordinate length mismatch");
}

Vec Algebra::mult(const Vec& x, const Vec& y) const {
  Vec r(dim_, field_.zero());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(y[j])) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k)
        r[k] = field_.add(r[k], field_.mul(c, sc_[i][j][k]));
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mult(x, basis_vec(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mult(basis_vec(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Vec Algebra::basis_vec(std::size_t i) const {
  Vec v(dim_, field_.zero());
  v[i] = field_.one();
  return v;
}

bool Algebra::is_idempotent(const Vec& e) const { return mult(e, e) == e; }

std::vector<std::string> validate_algebra(const Algebra& a) {
  std::vector<std::string> diags;
  const Field& f = a.field();
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.mult(a.unit(), a.basis_vec(i)) != a.basis_vec(i))
      diags.push_back("unit fails as left identity on basis " + a.labels()[i]);
    if (a.mult(a.basis_vec(i), a.unit()) != a.basis_vec(i))
      diags.push_back("unit fails as right identity on basis " + a.labels()[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.mult(a.mult(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
        Vec rhs = a.mult(a.basis_vec(i), a.mult(a.basis_vec(j), a.basis_vec(k)));
        if (lhs != rhs)
          diags.push_back("associativity fails on triple (" + a.labels()[i] + ", " +
                          a.labels()[j] + ", " + a.labels()[k] + ")");
      }
  const auto& idems = a.idempotents();
  Vec sum(n, f.zero());
  for (std::size_t s = 0; s < idems.size(); ++s) {
    if (a.mult(idems[s], idems[s]) != idems[s])
      diags.push_back("idempotent " + std::to_string(s) + " does not square to itself");
    for (std::size_t t = 0; t < idems.size(); ++t) {
      if (s == t) continue;
      Vec prod = a.mult(idems[s], idems[t]);
      if (!std::all_of(prod.begin(), prod.end(),
                       [&](const Scalar& x) { return f.is_zero(x); }))
        diags.push_back("idempotents " + std::to_string(s) + " and " +
                        std::to_string(t) + " are not orthogonal");
    }
    for (std::size_t k = 0; k < n; ++k) sum[k] = f.add(sum[k], idems[s][k]);
  }
  if (sum != a.unit())
    diags.push_back("idempotent system does not sum to the unit");
  return diags;
}

namespace {

struct PathKey {
  // Encodes a path: trivial path at v as {-(v+1)}, otherwise arrow ids.
  std::vector<long long> code;
  bool operator<(const PathKey& o) const { return code < o.code; }
};

PathKey key_of(const Path& p) {
  PathKey k;
  if (p.arrows.empty())
    k.code = {-(long long)p.vertex - 1};
  else
    for (auto a : p.arrows) k.code.push_back((long long)a);
  return k;
}

std::size_t path_source(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.back()].source;
}
std::size_t path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.front()].target;
}

// p after q: apply q first. Requires target(q) == source(p).
Path concat(const Path& p, const Path& q) {
  if (p.arrows.empty()) return q;
  if (q.arrows.empty()) return p;
  Path r = p;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

}  // namespace

AlgebraPtr path_algebra(const Quiver& q, const std::vector<Relation>& relations,
                        Field f, std::size_t length_cap) {
  constexpr std::size_t kPathBudget = 200000;
  // Enumerate paths by length.
  std::vector<Path> paths;
  std::map<PathKey, std::size_t> index;
  std::vector<std::vector<std::size_t>> by_length;
  by_length.emplace_back();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Path t;
    t.vertex = v;
    index[key_of(t)] = paths.size();
    by_length[0].push_back(paths.size());
    paths.push_back(t);
  }
  for (std::size_t len = 1; len <= length_cap; ++len) {
    by_length.emplace_back();
    for (std::size_t pi : by_length[len - 1]) {
      Path base = paths[pi];
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        if (q.arrows[ai].source != path_target(q, base)) continue;
        Path ext;
        ext.arrows.push_back(ai);
        ext = concat(ext, base);
        index[key_of(ext)] = paths.size();
        by_length[len].push_back(paths.size());
        paths.push_back(ext);
        if (paths.size() > kPathBudget)
          throw InfiniteDimensional("path enumeration exceeded budget");
      }
    }
    if (by_length[len].empty()) break;  // acyclic: no longer paths
  }

  std::size_t npaths = paths.size();
  auto path_vec = [&](const Path& p, const Scalar& c) {
    Vec v(npaths, f.zero());
    auto it = index.find(key_of(p));
    if (it != index.end()) v[it->second] = c;
    return v;
  };

  // Two-sided ideal generated by the relations, within the path span.
  for (const auto& rel : relations) {
    if (rel.empty()) continue;
    std::size_t s = path_source(q, rel.front().path);
    std::size_t t = path_target(q, rel.front().path);
    for (const auto& term : rel)
      if (path_source(q, term.path) != s || path_target(q, term.path) != t)
        throw Error("relation terms are not parallel paths");
  }
  std::vector<Vec> ideal_gens;
  for (const auto& rel : relations) {
    if (rel.empty()) continue;
    std::size_t s = path_source(q, rel.front().path);
    std::size_t t = path_target(q, rel.front().path);
    for (std::size_t li = 0; li < npaths; ++li) {
      if (path_source(q, paths[li]) != t) continue;  // left factor p: p ∘ rel
      for (std::size_t ri = 0; ri < npaths; ++ri) {
        if (path_target(q, paths[ri]) != s) continue;
        Vec v(npaths, f.zero());
        bool in_range = true;
        for (const auto& term : rel) {
          Path prod = concat(paths[li], concat(term.path, paths[ri]));
          auto it = index.find(key_of(prod));
          if (it == index.end()) {
            in_range = false;
            break;
          }
          v[it->second] = f.add(v[it->second], term.coeff);
        }
        if (in_range) ideal_gens.push_back(std::move(v));
      }
    }
  }

  // Eliminate longest paths first so the surviving basis is short paths.
  std::vector<std::size_t> order(npaths);
  for (std::size_t i = 0; i < npaths; ++i) order[i] = npaths - 1 - i;
  SpanReducer red(f, npaths, ideal_gens, order);

  // Finiteness: every maximal-length path must lie in the ideal.
  if (by_length.size() > length_cap && !by_length[length_cap].empty()) {
    for (std::size_t pi : by_length[length_cap]) {
      Scalar one = f.one();
      if (!red.contains(path_vec(paths[pi], one)))
        throw InfiniteDimensional("path basis does not terminate under length cap");
    }
  }

  std::size_t dim = red.quotient_dim();
  std::vector<std::size_t> basis_paths(dim);
  for (std::size_t i = 0; i < dim; ++i) basis_paths[i] = red.free_index(i);
  std::sort(basis_paths.begin(), basis_paths.end());
  auto quotient_coords_sorted = [&](const Vec& v) {
    Vec r = red.reduce(v);
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = r[basis_paths[i]];
    return out;
  };

  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Path& p = paths[basis_paths[i]];
    if (p.arrows.empty())
      labels[i] = "e_" + q.vertices[p.vertex];
    else {
      std::string s;
      for (auto a : p.arrows) s += q.arrows[a].label;
      labels[i] = s;
    }
  }

  std::vector<std::vector<Vec>> sc(dim, std::vector<Vec>(dim, Vec(dim, f.zero())));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& pi = paths[basis_paths[i]];
      const Path& pj = paths[basis_paths[j]];
      if (path_source(q, pi) != path_target(q, pj)) continue;  // product zero
      Path prod = concat(pi, pj);
      auto it = index.find(key_of(prod));
      if (it == index.end()) continue;  // beyond cap: lies in the ideal
      sc[i][j] = quotient_coords_sorted(path_vec(prod, f.one()));
    }

  Vec unit(dim, f.zero());
  std::vector<Vec> idems;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Path t;
    t.vertex = v;
    Vec ev = quotient_coords_sorted(path_vec(t, f.one()));
    for (std::size_t k = 0; k < dim; ++k) unit[k] = f.add(unit[k], ev[k]);
    idems.push_back(std::move(ev));
  }

  return std::make_shared<Algebra>(f, std::move(labels), std::move(sc),
                                   std::move(unit), std::move(idems));
}

CornerResult corner_algebra(const AlgebraPtr& a, const Vec& e) {
  const Field& f = a->field();
  if (!a->is_idempotent(e)) throw NotIdempotent("corner element is not idempotent");
  // memoized so repeated corners of the same idempotent are pointer-equal
  // (modules and bimodules compare algebras by pointer)
  static std::vector<std::tuple<AlgebraPtr, Vec, CornerResult>> cache;
  for (const auto& [alg, idem, result] : cache)
    if (alg == a && idem == e) return result;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a->dim(); ++i)
    gens.push_back(a->mult(e, a->mult(a->basis_vec(i), e)));
  std::vector<Vec> basis = span_basis(f, a->dim(), gens);
  std::size_t d = basis.size();
  Matrix embedding = Matrix::from_cols(f, a->dim(), basis);

  auto corner_coords = [&](const Vec& v) { return solve(embedding, v); };

  std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      sc[i][j] = corner_coords(a->mult(basis[i], basis[j]));
  Vec unit = d == 0 ? Vec{} : corner_coords(e);

  std::vector<Vec> idems;
  for (const auto& g : a->idempotents()) {
    Vec ege = a->mult(e, a->mult(g, e));
    if (std::all_of(ege.begin(), ege.end(),
                    [&](const Scalar& s) { return f.is_zero(s); }))
      continue;
    idems.push_back(corner_coords(ege));
  }
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = "c" + std::to_string(i);
  auto corner = std::make_shared<Algebra>(f, labels, sc, unit, idems);
  if (!validate_algebra(*corner).empty()) {
    // The pinched idempotent system is only valid when e is compatible
    // with the ambient system; fall back to the trivial system.
    corner = std::make_shared<Algebra>(f, labels, std::move(sc), unit,
                                       std::vector<Vec>{unit});
  }
  CornerResult out{corner, embedding};
  cache.emplace_back(a, e, out);
  return out;
}

std::vector<Vec> two_sided_ideal_basis(const Algebra& a, const Vec& x) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      gens.push_back(a.mult(a.basis_vec(i), a.mult(x, a.basis_vec(j))));
  return span_basis(a.field(), a.dim(), gens);
}

QuotientResult quotient_algebra(const AlgebraPtr& a,
                                const std::vector<Vec>& ideal_basis) {
  const Field& f = a->field();
  SpanReducer red(f, a->dim(), ideal_basis);
  for (const auto& v : ideal_basis)
    for (std::size_t i = 0; i < a->dim(); ++i) {
      if (!red.contains(a->mult(a->basis_vec(i), v)) ||
          !red.contains(a->mult(v, a->basis_vec(i))))
        throw NotAnIdeal("subspace is not a two-sided ideal");
    }
  std::size_t d = red.quotient_dim();
  Matrix projection(f, d, a->dim());
  for (std::size_t j = 0; j < a->dim(); ++j) {
    Vec qc = red.quotient_coords(a->basis_vec(j));
    for (std::size_t i = 0; i < d; ++i) projection.at(i, j) = qc[i];
  }
  Matrix section(f, a->dim(), d);
  for (std::size_t i = 0; i < d; ++i) section.at(red.free_index(i), i) = f.one();

  std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      sc[i][j] = projection.apply(
          a->mult(section.col_vec(i), section.col_vec(j)));
  Vec unit = projection.apply(a->unit());
  std::vector<Vec> idems;
  for (const auto& e : a->idempotents()) {
    Vec img = projection.apply(e);
    if (!std::all_of(img.begin(), img.end(),
                     [&](const Scalar& s) { return f.is_zero(s); }))
      idems.push_back(std::move(img));
  }
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i)
    labels[i] = a->labels()[red.free_index(i)] + "~";
  auto quot = std::make_shared<Algebra>(f, std::move(labels), std::move(sc),
                                        std::move(unit), std::move(idems));
  return {quot, projection, section};
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  // memoized in both directions so op(op(a)) == a and repeated calls share
  // one instance (modules compare algebras by pointer)
  static std::vector<std::pair<AlgebraPtr, AlgebraPtr>> cache;
  for (const auto& [fwd, bwd] : cache) {
    if (fwd == a) return bwd;
    if (bwd == a) return fwd;
  }
  std::size_t n = a->dim();
  std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc[i][j] = a->sc(j, i);
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back(l + "^op");
  auto op = std::make_shared<Algebra>(a->field(), std::move(labels),
                                      std::move(sc), a->unit(), a->idempotents());
  cache.emplace_back(a, op);
  return op;
}

namespace {

Scalar trace(const Matrix& m) {
  Scalar t = m.field().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m.at(i, i));
  return t;
}

}  // namespace

std::vector<Vec> radical_basis(const Algebra& a) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  if (n == 0) return {};
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < n; ++i) left.push_back(a.left_mult(a.basis_vec(i)));
  auto lmul = [&](const Vec& x) {
    Matrix m = Matrix::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (!f.is_zero(x[i])) m = m + left[i].scaled(x[i]);
    return m;
  };

  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis_vec(i));

  if (f.kind() == Field::Kind::Rational) {
    // Dickson: the radical is the kernel of the trace form of the
    // regular representation.
    Matrix cond(f, n, basis.size());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < basis.size(); ++c)
        cond.at(r, c) = trace(lmul(basis[c]) * left[r]);
    std::vector<Vec> out;
    for (auto& k : kernel_basis(cond)) {
      Vec v(n, f.zero());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
          v[j] = f.add(v[j], f.mul(k[i], basis[i][j]));
      out.push_back(std::move(v));
    }
    return span_basis(f, n, out);
  }

  // Prime field: the radical is the joint annihilator of the composition
  // factors of the regular module. Factors are produced by repeatedly
  // splitting off a minimal submodule of the current quotient; a vector
  // whose generated submodule has minimal dimension generates a simple.
  long long p = f.p();
  {
    double bits = (double)n * std::log2((double)p);
    if (bits > 22)
      throw Error("radical computation budget exceeded for this field/dimension");
  }
  std::vector<Vec> sub;  // ambient basis of the accumulated submodule
  std::vector<Vec> annihilator_rows;
  while (sub.size() < n) {
    SpanReducer red(f, n, sub);
    std::size_t q = red.quotient_dim();
    auto lift = [&](const Vec& w) {
      Vec v(n, f.zero());
      for (std::size_t i = 0; i < q; ++i) v[red.free_index(i)] = w[i];
      return v;
    };
    auto act = [&](std::size_t bi, const Vec& w) {
      return red.quotient_coords(a.mult(a.basis_vec(bi), lift(w)));
    };
    auto generated = [&](const Vec& w) {
      std::vector<Vec> gen = {w};
      std::size_t processed = 0;
      while (processed < gen.size()) {
        Vec cur = gen[processed++];
        for (std::size_t bi = 0; bi < n; ++bi) {
          Vec img = act(bi, cur);
          std::vector<Vec> trial = gen;
          trial.push_back(img);
          auto sb = span_basis(f, q, trial);
          if (sb.size() > span_basis(f, q, gen).size()) gen.push_back(img);
        }
        gen = span_basis(f, q, gen);
      }
      return span_basis(f, q, gen);
    };

    // minimal generated submodule over all nonzero vectors
    std::vector<Vec> best;
    Vec counter(q, f.zero());
    long long total = 1;
    for (std::size_t i = 0; i < q; ++i) total *= p;
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      for (std::size_t i = 0; i < q; ++i) {
        counter[i] = f.from_int(c % p);
        c /= p;
      }
      auto gen = generated(counter);
      if (best.empty() || gen.size() < best.size()) best = gen;
      if (best.size() == 1) break;
    }

    // annihilator conditions: x = sum lambda_i b_i kills the factor iff
    // every entry of its action matrix vanishes
    std::size_t s = best.size();
    Matrix factor_basis = Matrix::from_cols(f, q, best);
    for (std::size_t jcol = 0; jcol < s; ++jcol)
      for (std::size_t r = 0; r < s; ++r) {
        Vec row(n, f.zero());
        for (std::size_t bi = 0; bi < n; ++bi) {
          Vec img = act(bi, best[jcol]);
          Vec coords = solve(factor_basis, img);
          row[bi] = coords[r];
        }
        annihilator_rows.push_back(std::move(row));
      }

    // absorb the factor into the accumulated submodule
    for (const auto& w : best) sub.push_back(lift(w));
    sub = span_basis(f, n, sub);
  }

  Matrix cond = Matrix::from_rows(f, n, annihilator_rows);
  std::vector<Vec> out;
  for (auto& k : kernel_basis(cond)) out.push_back(k);
  return span_basis(f, n, out);
}

}  // namespace cotor
