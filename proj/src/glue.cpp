#include "cotor/glue.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace cotor {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool in_class(const ModuleClass& c, std::size_t universe_index) {
  return std::binary_search(c.indices.begin(), c.indices.end(),
                            universe_index);
}

/// Visit linear combinations of the hom basis until the callback accepts
/// one. Exhaustive over small finite search spaces, seeded sampling
/// otherwise.
bool search_hom_combos(const Field& f, const std::vector<Matrix>& basis,
                       std::size_t enum_cap,
                       const std::function<bool(const Matrix&)>& accept) {
  if (basis.empty()) return false;
  std::size_t h = basis.size();
  auto combo = [&](const Vec& coeffs) {
    Matrix m = Matrix::zero(f, basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < h; ++i)
      if (!f.is_zero(coeffs[i])) m = m + basis[i].scaled(coeffs[i]);
    return m;
  };
  if (f.is_finite()) {
    long long p = f.p();
    double total = std::pow((double)p, (double)h);
    if (total <= (double)enum_cap) {
      Vec coeffs(h, f.zero());
      std::vector<long long> digits(h, 0);
      for (;;) {
        std::size_t i = 0;
        while (i < h && digits[i] == p - 1) {
          digits[i] = 0;
          coeffs[i] = f.zero();
          ++i;
        }
        if (i == h) return false;
        ++digits[i];
        coeffs[i] = f.from_int(digits[i]);
        if (accept(combo(coeffs))) return true;
      }
    }
  }
  std::mt19937 rng(73856093u);
  std::uniform_int_distribution<long long> coeff(-2, 2);
  for (std::size_t trial = 0; trial < enum_cap; ++trial) {
    Vec coeffs(h, f.zero());
    for (auto& x : coeffs) x = f.from_int(coeff(rng));
    if (accept(combo(coeffs))) return true;
  }
  return false;
}

}  // namespace

UniversePtr enumerate_universe(const AlgebraPtr& a, std::size_t max_dim,
                               std::size_t budget) {
  auto u = std::make_shared<Universe>();
  u->algebra = a;
  u->members = enumerate_indecomposables(a, max_dim, budget);
  std::ostringstream prov;
  prov << "enumerated(dim<=" << max_dim << ")";
  u->provenance = prov.str();
  for (const auto& p : projectives(a))
    if (!locate(*u, p))
      throw UniverseMiss("universe bound excludes an indecomposable projective");
  for (const auto& i : injectives(a))
    if (!locate(*u, i))
      throw UniverseMiss("universe bound excludes an indecomposable injective");
  return u;
}

UniversePtr declare_universe(const AlgebraPtr& a,
                             std::vector<ModulePtr> members) {
  auto u = std::make_shared<Universe>();
  u->algebra = a;
  u->members = std::move(members);
  u->provenance = "declared";
  for (const auto& m : u->members) {
    if (m->algebra() != a)
      throw Error("universe member over a foreign algebra");
    if (!is_indecomposable(m))
      throw Error("universe member is decomposable");
  }
  for (std::size_t i = 0; i < u->members.size(); ++i)
    for (std::size_t j = i + 1; j < u->members.size(); ++j)
      if (is_isomorphic(u->members[i], u->members[j]).isomorphic)
        throw Error("universe members repeat an isomorphism class");
  for (const auto& p : projectives(a))
    if (!locate(*u, p))
      throw UniverseMiss("declared universe misses an indecomposable projective");
  for (const auto& i : injectives(a))
    if (!locate(*u, i))
      throw UniverseMiss("declared universe misses an indecomposable injective");
  return u;
}

std::optional<std::size_t> locate(const Universe& u, const ModulePtr& m) {
  for (std::size_t i = 0; i < u.members.size(); ++i)
    if (u.members[i]->dim() == m->dim() &&
        is_isomorphic(u.members[i], m).isomorphic)
      return i;
  return std::nullopt;
}

std::vector<std::size_t> decompose_into(const Universe& u,
                                        const ModulePtr& m) {
  std::vector<std::size_t> out;
  for (const auto& s : indecompose(m)) {
    auto idx = locate(u, s.module);
    if (!idx)
      throw UniverseMiss("indecomposable summand outside the universe");
    for (std::size_t k = 0; k < s.multiplicity; ++k) out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModuleClass make_class(const UniversePtr& u,
                       std::vector<std::size_t> indices) {
  for (auto i : indices)
    if (i >= u->members.size()) throw Error("class index out of range");
  return {u, sorted_unique(std::move(indices))};
}

ModuleClass full_class(const UniversePtr& u) {
  std::vector<std::size_t> all(u->members.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {u, all};
}

ModuleClass empty_class(const UniversePtr& u) { return {u, {}}; }

ModuleClass class_from_modules(const UniversePtr& u,
                               const std::vector<ModulePtr>& mods) {
  std::vector<std::size_t> idx;
  for (const auto& m : mods) {
    auto parts = decompose_into(*u, m);
    idx.insert(idx.end(), parts.begin(), parts.end());
  }
  return {u, sorted_unique(std::move(idx))};
}

bool class_contains(const ModuleClass& c, const ModulePtr& m) {
  if (m->dim() == 0) return true;
  for (auto i : decompose_into(*c.universe, m))
    if (!in_class(c, i)) return false;
  return true;
}

ModuleClass right_perp(const ModuleClass& c) {
  const auto& u = *c.universe;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < u.members.size(); ++x) {
    bool ok = true;
    for (auto i : c.indices)
      if (ext_dim(u.members[i], u.members[x], 1) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return {c.universe, out};
}

ModuleClass left_perp(const ModuleClass& c) {
  const auto& u = *c.universe;
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < u.members.size(); ++y) {
    bool ok = true;
    for (auto i : c.indices)
      if (ext_dim(u.members[y], u.members[i], 1) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return {c.universe, out};
}

CotorsionPairReport is_cotorsion_pair(const ModuleClass& c,
                                      const ModuleClass& d) {
  if (c.universe != d.universe)
    throw Error("cotorsion pair candidates must share a universe");
  CotorsionPairReport rep;
  auto rp = right_perp(c);
  auto lp = left_perp(d);
  rep.is_pair = rp.indices == d.indices && lp.indices == c.indices;
  if (rp.indices != d.indices) {
    std::ostringstream os;
    os << "right perp of the left class has " << rp.indices.size()
       << " members, the right class has " << d.indices.size();
    rep.failures.push_back(os.str());
  }
  if (lp.indices != c.indices) {
    std::ostringstream os;
    os << "left perp of the right class has " << lp.indices.size()
       << " members, the left class has " << c.indices.size();
    rep.failures.push_back(os.str());
  }
  return rep;
}

bool is_hereditary(const ModuleClass& c, const ModuleClass& d) {
  const auto& u = *c.universe;
  bool ext2_clear = true;
  for (auto i : c.indices) {
    for (auto j : d.indices)
      if (ext_dim(u.members[i], u.members[j], 2) != 0) {
        ext2_clear = false;
        break;
      }
    if (!ext2_clear) break;
  }

  if (ext2_clear) {
    // closure cross-checks on extension-built probe sequences
    for (auto t : c.indices)
      for (std::size_t k = 0; k < u.members.size(); ++k)
        for (const auto& cls : ext1_basis(u.members[t], u.members[k])) {
          auto ses = ext1_to_ses(cls);
          try {
            if (class_contains(c, ses.projection.source) &&
                !class_contains(c, ses.inclusion.source))
              throw Error("heredity certificates disagree: kernel closure");
          } catch (const UniverseMiss&) {
            // middle term outside the universe: probe carries no information
          }
        }
    for (auto k : d.indices)
      for (std::size_t t = 0; t < u.members.size(); ++t)
        for (const auto& cls : ext1_basis(u.members[t], u.members[k])) {
          auto ses = ext1_to_ses(cls);
          try {
            if (class_contains(d, ses.projection.source) &&
                !class_contains(d, ses.projection.target))
              throw Error("heredity certificates disagree: cokernel closure");
          } catch (const UniverseMiss&) {
            // middle term outside the universe: probe carries no information
          }
        }
  }
  return ext2_clear;
}

std::pair<TriState, std::vector<CompletenessWitness>> is_complete(
    const ModuleClass& c, const ModuleClass& d, const SearchBudget& budget) {
  const auto& u = *c.universe;
  const Field& f = u.algebra->field();
  std::vector<CompletenessWitness> witnesses;

  // candidate covers: multisets of c-members, canonically ordered by total
  // dimension then lexicographically
  std::vector<std::vector<std::size_t>> candidates;
  std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t)> rec =
      [&](std::size_t pos, std::vector<std::size_t>& acc, std::size_t dim) {
        if (!acc.empty()) candidates.push_back(acc);
        if (pos == c.indices.size()) return;
        rec(pos + 1, acc, dim);
        std::size_t idx = c.indices[pos];
        std::size_t mdim = u.members[idx]->dim();
        std::size_t added = 0;
        while (added < budget.mult_cap && dim + mdim <= budget.dim_cap) {
          acc.push_back(idx);
          dim += mdim;
          ++added;
          rec(pos + 1, acc, dim);
          if (added == budget.mult_cap || dim + mdim > budget.dim_cap) break;
        }
        for (std::size_t k = 0; k < added; ++k) acc.pop_back();
      };
  std::vector<std::size_t> acc;
  rec(0, acc, 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) {
                     std::size_t da = 0, db = 0;
                     for (auto i : a) da += u.members[i]->dim();
                     for (auto i : b) db += u.members[i]->dim();
                     return da < db;
                   });

  bool all_found = true;
  for (std::size_t x = 0; x < u.members.size(); ++x) {
    const ModulePtr& target = u.members[x];
    bool found = false;
    for (const auto& cand : candidates) {
      std::vector<ModulePtr> parts;
      for (auto i : cand) parts.push_back(u.members[i]);
      auto cover = direct_sum(u.algebra, parts).module;
      auto homs = hom_space(*cover, *target);
      std::optional<ShortExactSequence> hit;
      search_hom_combos(f, homs, budget.enum_cap, [&](const Matrix& h) {
        ModuleMap cand_map(cover, target, h);
        if (!cand_map.is_surjective()) return false;
        auto k = kernel(cand_map);
        try {
          if (!class_contains(d, k.module)) return false;
        } catch (const UniverseMiss&) {
          return false;
        } catch (const CapExceeded&) {
          return false;
        }
        hit = ShortExactSequence{k.map, cand_map};
        return true;
      });
      if (hit) {
        witnesses.push_back({x, *hit});
        found = true;
        break;
      }
    }
    all_found = all_found && found;
  }
  return {all_found ? TriState::yes : TriState::inconclusive, witnesses};
}

CotorsionPairReport full_pair_report(const ModuleClass& c,
                                     const ModuleClass& d,
                                     const SearchBudget& budget) {
  auto rep = is_cotorsion_pair(c, d);
  if (!rep.is_pair) return rep;
  rep.is_hereditary = is_hereditary(c, d);
  auto [flag, wits] = is_complete(c, d, budget);
  rep.is_complete = flag;
  rep.witnesses = std::move(wits);
  return rep;
}

std::vector<std::string> validate_scenario(const GluedScenario& s) {
  std::vector<std::string> errs;
  if (!s.rec) {
    errs.push_back("missing recollement");
    return errs;
  }
  if (s.ambient->algebra != s.rec->lambda())
    errs.push_back("ambient universe over the wrong algebra");
  if (s.side->algebra != s.rec->quotient())
    errs.push_back("side universe over the wrong algebra");
  if (s.corner->algebra != s.rec->corner())
    errs.push_back("corner universe over the wrong algebra");
  if (s.u_prime.universe != s.side || s.v_prime.universe != s.side)
    errs.push_back("primed classes must live on the side universe");
  if (s.u_dprime.universe != s.corner || s.v_dprime.universe != s.corner)
    errs.push_back("double-primed classes must live on the corner universe");
  return errs;
}

namespace {

ModuleClass glued_class(const GluedScenario& s, bool upper) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < s.ambient->members.size(); ++x) {
    const ModulePtr& m = s.ambient->members[x];
    bool ok;
    if (upper) {
      ok = s.rec->derived_vanishes(DerivedTag::R1_i_shriek, m).first &&
           class_contains(s.v_prime,
                          s.rec->apply(FunctorTag::i_shriek, m)) &&
           class_contains(s.v_dprime, s.rec->apply(FunctorTag::j_star, m));
    } else {
      ok = s.rec->derived_vanishes(DerivedTag::L1_i_star, m).first &&
           class_contains(s.u_prime,
                          s.rec->apply(FunctorTag::i_star_upper, m)) &&
           class_contains(s.u_dprime, s.rec->apply(FunctorTag::j_star, m));
    }
    if (ok) out.push_back(x);
  }
  return {s.ambient, out};
}

bool vanishes_on_class(const GluedScenario& s, DerivedTag t,
                       const ModuleClass& c) {
  for (auto i : c.indices) {
    const ModulePtr& m = c.universe->members[i];
    ModulePtr probe = m;
    if (!s.rec->derived_vanishes(t, probe).first) return false;
  }
  return true;
}

}  // namespace

ModuleClass glued_N(const GluedScenario& s) { return glued_class(s, true); }
ModuleClass glued_M(const GluedScenario& s) { return glued_class(s, false); }

AuxiliaryClasses auxiliary_classes(const GluedScenario& s) {
  std::vector<ModulePtr> c_mods, d_mods;
  for (auto i : s.u_prime.indices)
    c_mods.push_back(
        s.rec->apply(FunctorTag::i_lower, s.side->members[i]));
  for (auto i : s.u_dprime.indices)
    c_mods.push_back(
        s.rec->apply(FunctorTag::j_lower_shriek, s.corner->members[i]));
  for (auto i : s.v_prime.indices)
    d_mods.push_back(
        s.rec->apply(FunctorTag::i_lower, s.side->members[i]));
  for (auto i : s.v_dprime.indices)
    d_mods.push_back(
        s.rec->apply(FunctorTag::j_upper_star, s.corner->members[i]));
  return {class_from_modules(s.ambient, c_mods),
          class_from_modules(s.ambient, d_mods)};
}

PerpTransportReport check_perp_transport(const GluedScenario& s) {
  PerpTransportReport rep;
  auto side_projs = projectives(s.rec->quotient());
  auto side_injs = injectives(s.rec->quotient());

  bool projs_in_u = true;
  for (const auto& p : side_projs)
    projs_in_u = projs_in_u && class_contains(s.u_prime, p);
  rep.clause1_applicable =
      projs_in_u && vanishes_on_class(s, DerivedTag::L1_j_shriek, s.u_dprime);
  if (rep.clause1_applicable) {
    std::vector<ModulePtr> c_mods;
    for (auto i : s.u_prime.indices)
      c_mods.push_back(
          s.rec->apply(FunctorTag::i_lower, s.side->members[i]));
    for (auto i : s.u_dprime.indices)
      c_mods.push_back(
          s.rec->apply(FunctorTag::j_lower_shriek, s.corner->members[i]));
    auto c_class = class_from_modules(s.ambient, c_mods);
    GluedScenario t = s;
    t.v_prime = right_perp(s.u_prime);
    t.v_dprime = right_perp(s.u_dprime);
    rep.clause1_holds = right_perp(c_class).indices == glued_N(t).indices;
  }

  bool injs_in_v = true;
  for (const auto& i : side_injs)
    injs_in_v = injs_in_v && class_contains(s.v_prime, i);
  rep.clause2_applicable =
      injs_in_v && vanishes_on_class(s, DerivedTag::R1_j_star, s.v_dprime);
  if (rep.clause2_applicable) {
    std::vector<ModulePtr> d_mods;
    for (auto i : s.v_prime.indices)
      d_mods.push_back(
          s.rec->apply(FunctorTag::i_lower, s.side->members[i]));
    for (auto i : s.v_dprime.indices)
      d_mods.push_back(
          s.rec->apply(FunctorTag::j_upper_star, s.corner->members[i]));
    auto d_class = class_from_modules(s.ambient, d_mods);
    GluedScenario t = s;
    t.u_prime = left_perp(s.v_prime);
    t.u_dprime = left_perp(s.v_dprime);
    rep.clause2_holds = left_perp(d_class).indices == glued_M(t).indices;
  }
  return rep;
}

GluingReport verify_gluing(const GluedScenario& s,
                           const SearchBudget& budget) {
  auto errs = validate_scenario(s);
  if (!errs.empty()) throw Error("malformed scenario: " + errs.front());

  GluingReport rep;
  rep.condition_p = s.rec->condition_p().holds;
  rep.vanish_l1_shriek_u =
      vanishes_on_class(s, DerivedTag::L1_j_shriek, s.u_dprime);
  rep.vanish_r1_star_v =
      vanishes_on_class(s, DerivedTag::R1_j_star, s.v_dprime);
  rep.vanish_l1_shriek_perp_v =
      vanishes_on_class(s, DerivedTag::L1_j_shriek, left_perp(s.v_dprime));
  rep.vanish_r1_star_u_perp =
      vanishes_on_class(s, DerivedTag::R1_j_star, right_perp(s.u_dprime));

  auto side_pair = is_cotorsion_pair(s.u_prime, s.v_prime);
  auto corner_pair = is_cotorsion_pair(s.u_dprime, s.v_dprime);
  rep.side_pairs_ok = side_pair.is_pair && corner_pair.is_pair;

  rep.glued_m = glued_M(s);
  rep.glued_n = glued_N(s);
  auto lp_n = left_perp(rep.glued_n);
  auto rp_m = right_perp(rep.glued_m);

  auto set_status = [](GluingReport::Entry& e, bool gate, bool holds,
                       const std::string& note = "") {
    e.asserted = gate;
    e.status = holds ? TriState::yes : TriState::no;
    e.note = note;
  };

  // one-sided gluing: each vanishing hypothesis yields one pair
  set_status(rep.one_sided_n, rep.side_pairs_ok && rep.vanish_l1_shriek_u,
             is_cotorsion_pair(lp_n, rep.glued_n).is_pair);
  set_status(rep.one_sided_m, rep.side_pairs_ok && rep.vanish_r1_star_v,
             is_cotorsion_pair(rep.glued_m, rp_m).is_pair);

  // with condition (P) and both vanishings the one-sided pairs coincide
  bool agree_gate = rep.side_pairs_ok && rep.condition_p &&
                    rep.vanish_l1_shriek_u && rep.vanish_r1_star_v;
  set_status(rep.pairs_agree, agree_gate,
             lp_n.indices == rep.glued_m.indices &&
                 rp_m.indices == rep.glued_n.indices);

  auto glued_pair = is_cotorsion_pair(rep.glued_m, rep.glued_n);
  bool strong_gate = rep.condition_p && rep.vanish_l1_shriek_perp_v &&
                     rep.vanish_r1_star_u_perp &&
                     (rep.vanish_l1_shriek_u || rep.vanish_r1_star_v);
  set_status(rep.glued_is_pair, strong_gate && rep.side_pairs_ok,
             glued_pair.is_pair);

  bool sides_hereditary =
      rep.side_pairs_ok && is_hereditary(s.u_prime, s.v_prime) &&
      is_hereditary(s.u_dprime, s.v_dprime);
  bool glued_hereditary =
      glued_pair.is_pair && is_hereditary(rep.glued_m, rep.glued_n);
  set_status(rep.heredity_forward,
             strong_gate && rep.side_pairs_ok && sides_hereditary &&
                 glued_pair.is_pair,
             glued_hereditary);
  set_status(rep.heredity_backward,
             strong_gate && rep.side_pairs_ok && glued_pair.is_pair &&
                 glued_hereditary,
             sides_hereditary);

  // completeness transfer needs complete hereditary sides and both
  // vanishing hypotheses
  auto side_complete = rep.side_pairs_ok
                           ? is_complete(s.u_prime, s.v_prime, budget).first
                           : TriState::inconclusive;
  auto corner_complete =
      rep.side_pairs_ok ? is_complete(s.u_dprime, s.v_dprime, budget).first
                        : TriState::inconclusive;
  bool complete_gate = rep.condition_p && rep.vanish_l1_shriek_u &&
                       rep.vanish_r1_star_v && sides_hereditary &&
                       side_complete == TriState::yes &&
                       corner_complete == TriState::yes;
  rep.completeness.asserted = complete_gate;
  if (glued_pair.is_pair) {
    auto [flag, wits] = is_complete(rep.glued_m, rep.glued_n, budget);
    rep.completeness.status = flag;
    if (flag == TriState::inconclusive)
      rep.completeness.note = "witness search budget exhausted";
  } else {
    rep.completeness.status = TriState::no;
    rep.completeness.note = "glued classes do not form a pair";
  }

  // converse of the gluing theorem, under its own hypothesis set
  set_status(rep.converse_pairs, strong_gate && glued_pair.is_pair,
             rep.side_pairs_ok);

  // recovering complete hereditary side pairs from a complete hereditary
  // glued pair needs one of two compatibility conditions
  bool cond1 = true;
  for (auto i : s.v_dprime.indices) {
    auto jy = s.rec->apply(FunctorTag::j_upper_star, s.corner->members[i]);
    cond1 = cond1 &&
            class_contains(s.v_prime,
                           s.rec->apply(FunctorTag::i_star_upper, jy)) &&
            s.rec->derived_vanishes(DerivedTag::L1_i_star, jy).first;
    if (!cond1) break;
  }
  bool cond2 = true;
  for (auto i : s.u_dprime.indices) {
    auto jy =
        s.rec->apply(FunctorTag::j_lower_shriek, s.corner->members[i]);
    cond2 = cond2 &&
            class_contains(s.u_prime,
                           s.rec->apply(FunctorTag::i_shriek, jy)) &&
            s.rec->derived_vanishes(DerivedTag::R1_i_shriek, jy).first;
    if (!cond2) break;
  }
  bool glued_complete = false;
  if (glued_pair.is_pair && glued_hereditary)
    glued_complete =
        is_complete(rep.glued_m, rep.glued_n, budget).first == TriState::yes;
  set_status(rep.converse_complete,
             strong_gate && glued_pair.is_pair && glued_hereditary &&
                 glued_complete && (cond1 || cond2),
             rep.side_pairs_ok && sides_hereditary &&
                 side_complete == TriState::yes &&
                 corner_complete == TriState::yes);

  if (!strong_gate)
    rep.notes.push_back(
        "strong hypothesis panel failed; two-sided conclusions not asserted");
  return rep;
}

}  // namespace cotor
