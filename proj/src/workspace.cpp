#include "cotor/workspace.hpp"

#include <fstream>
#include <sstream>

namespace cotor {

namespace {

using json = nlohmann::json;

const json& jat(const json& o, const char* key, const std::string& where) {
  if (!o.is_object() || !o.contains(key))
    throw ParseError(where + ": missing field '" + key + "'");
  return o.at(key);
}

std::vector<long long> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<long long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

Vec to_vec(const Field& f, const std::vector<long long>& ints) {
  Vec out;
  out.reserve(ints.size());
  for (auto n : ints) out.push_back(f.from_int(n));
  return out;
}

Matrix to_matrix(const Field& f, std::size_t rows, std::size_t cols,
                 const json& j, const std::string& where) {
  auto ints = int_list(j, where);
  if (ints.size() != rows * cols) {
    std::ostringstream os;
    os << where << ": expected " << rows << "x" << cols << " = " << rows * cols
       << " entries, got " << ints.size();
    throw ParseError(os.str());
  }
  return Matrix::from_ints(f, rows, cols, ints);
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name,
                                      const char* what) {
  auto it = m.find(name);
  if (it == m.end())
    throw DanglingReference(std::string(what) + " not found: '" + name + "'");
  return it->second;
}

Field parse_field(const json& j) {
  std::string kind = jat(j, "kind", "field").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime")
    return Field::prime(jat(j, "p", "field").get<long long>());
  throw ParseError("field: unknown kind '" + kind + "'");
}

AlgebraPtr parse_algebra(const Field& f, const std::string& name,
                         const json& j) {
  std::string where = "algebras." + name;
  std::string type = jat(j, "type", where).get<std::string>();
  if (type == "path") {
    Quiver q;
    for (const auto& v : jat(j, "vertices", where))
      q.vertices.push_back(v.get<std::string>());
    if (j.contains("arrows"))
      for (const auto& a : j.at("arrows"))
        q.arrows.push_back({jat(a, "from", where).get<std::size_t>(),
                            jat(a, "to", where).get<std::size_t>(),
                            jat(a, "label", where).get<std::string>()});
    std::vector<Relation> rels;
    if (j.contains("relations"))
      for (const auto& rel : j.at("relations")) {
        Relation r;
        for (const auto& term : rel) {
          Path p;
          for (const auto& x :
               int_list(jat(term, "arrows", where), where + ".relations"))
            p.arrows.push_back((std::size_t)x);
          if (term.contains("vertex"))
            p.vertex = term.at("vertex").get<std::size_t>();
          r.push_back(
              {f.from_int(jat(term, "coeff", where).get<long long>()), p});
        }
        rels.push_back(std::move(r));
      }
    try {
      return path_algebra(q, rels, f);
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (type == "table") {
    std::size_t n = jat(j, "dim", where).get<std::size_t>();
    const json& st = jat(j, "structure", where);
    if (!st.is_array() || st.size() != n)
      throw ParseError(where + ".structure: expected " + std::to_string(n) +
                       " rows");
    std::vector<std::vector<Vec>> sc(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (!st.at(i).is_array() || st.at(i).size() != n) {
        std::ostringstream os;
        os << where << ".structure: row " << i << " has wrong length";
        throw ParseError(os.str());
      }
      for (std::size_t k = 0; k < n; ++k) {
        std::ostringstream os;
        os << where << ".structure[" << i << "][" << k << "]";
        auto ints = int_list(st.at(i).at(k), os.str());
        if (ints.size() != n)
          throw ParseError(os.str() + ": expected " + std::to_string(n) +
                           " entries, got " + std::to_string(ints.size()));
        sc[i][k] = to_vec(f, ints);
      }
    }
    Vec unit = to_vec(f, int_list(jat(j, "unit", where), where + ".unit"));
    if (unit.size() != n) throw ParseError(where + ".unit: wrong length");
    std::vector<Vec> idems;
    for (const auto& e : jat(j, "idempotents", where)) {
      Vec v = to_vec(f, int_list(e, where + ".idempotents"));
      if (v.size() != n)
        throw ParseError(where + ".idempotents: wrong length");
      idems.push_back(std::move(v));
    }
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
    if (j.contains("labels")) {
      labels.clear();
      for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
      if (labels.size() != n) throw ParseError(where + ".labels: wrong length");
    }
    auto alg = std::make_shared<Algebra>(f, labels, sc, unit, idems);
    auto errs = validate_algebra(*alg);
    if (!errs.empty()) throw ValidationError(where + ": " + errs.front());
    return alg;
  }
  throw ParseError(where + ": unknown type '" + type + "'");
}

std::vector<Matrix> parse_actions(const Field& f, std::size_t count,
                                  std::size_t d, const json& j,
                                  const std::string& where) {
  if (!j.is_array() || j.size() != count)
    throw ParseError(where + ": expected one matrix per algebra basis element");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::ostringstream os;
    os << where << "[" << i << "]";
    out.push_back(to_matrix(f, d, d, j.at(i), os.str()));
  }
  return out;
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("workspace: ") + e.what());
  }
  Workspace ws;
  if (doc.contains("schema_version"))
    ws.schema_version = doc.at("schema_version").get<int>();
  if (ws.schema_version != 1)
    throw ValidationError("workspace: unsupported schema_version");
  if (doc.contains("field")) ws.field = parse_field(doc.at("field"));
  const Field& f = ws.field;

  if (doc.contains("algebras"))
    for (const auto& [name, spec] : doc.at("algebras").items())
      ws.algebras[name] = parse_algebra(f, name, spec);

  if (doc.contains("bimodules"))
    for (const auto& [name, spec] : doc.at("bimodules").items()) {
      std::string where = "bimodules." + name;
      auto left = lookup(ws.algebras,
                         jat(spec, "left", where).get<std::string>(), "algebra");
      auto right = lookup(
          ws.algebras, jat(spec, "right", where).get<std::string>(), "algebra");
      std::size_t d = jat(spec, "dim", where).get<std::size_t>();
      auto bm = std::make_shared<Bimodule>(
          left, right,
          parse_actions(f, left->dim(), d, jat(spec, "left_action", where),
                        where + ".left_action"),
          parse_actions(f, right->dim(), d, jat(spec, "right_action", where),
                        where + ".right_action"));
      auto errs = validate_bimodule(*bm);
      if (!errs.empty()) throw ValidationError(where + ": " + errs.front());
      ws.bimodules[name] = bm;
    }

  if (doc.contains("modules"))
    for (const auto& [name, spec] : doc.at("modules").items()) {
      std::string where = "modules." + name;
      auto alg = lookup(ws.algebras,
                        jat(spec, "algebra", where).get<std::string>(),
                        "algebra");
      std::size_t d = jat(spec, "dim", where).get<std::size_t>();
      auto mod = std::make_shared<Module>(
          alg, parse_actions(f, alg->dim(), d, jat(spec, "action", where),
                             where + ".action"));
      auto errs = validate_module(*mod);
      if (!errs.empty()) throw ValidationError(where + ": " + errs.front());
      ws.modules[name] = mod;
    }

  if (doc.contains("morita"))
    for (const auto& [name, spec] : doc.at("morita").items()) {
      std::string where = "morita." + name;
      MoritaData d;
      d.a = lookup(ws.algebras, jat(spec, "a", where).get<std::string>(),
                   "algebra");
      d.b = lookup(ws.algebras, jat(spec, "b", where).get<std::string>(),
                   "algebra");
      d.m = lookup(ws.bimodules, jat(spec, "m", where).get<std::string>(),
                   "bimodule");
      d.n = lookup(ws.bimodules, jat(spec, "n", where).get<std::string>(),
                   "bimodule");
      d.phi = to_matrix(f, d.b->dim(), d.m->dim() * d.n->dim(),
                        jat(spec, "phi", where), where + ".phi");
      d.psi = to_matrix(f, d.a->dim(), d.n->dim() * d.m->dim(),
                        jat(spec, "psi", where), where + ".psi");
      auto errs = validate_morita(d);
      if (!errs.empty()) throw ValidationError(where + ": " + errs.front());
      ws.morita[name] = d;
    }

  if (doc.contains("classes"))
    for (const auto& [name, spec] : doc.at("classes").items()) {
      std::string where = "classes." + name;
      ClassSpec cs;
      if (spec.contains("base")) cs.base = spec.at("base").get<std::string>();
      if (cs.base != "all" && cs.base != "none" && cs.base != "projectives" &&
          cs.base != "injectives" && cs.base != "simples")
        throw ValidationError(where + ": unknown base '" + cs.base + "'");
      if (spec.contains("perp")) {
        cs.perp = spec.at("perp").get<std::string>();
        if (cs.perp != "right" && cs.perp != "left")
          throw ValidationError(where + ": perp must be right or left");
      }
      if (spec.contains("plus"))
        for (const auto& m : spec.at("plus")) {
          std::string nm = m.get<std::string>();
          lookup(ws.modules, nm, "module");
          cs.plus.push_back(nm);
        }
      ws.classes[name] = cs;
    }

  if (doc.contains("scenarios"))
    for (const auto& [name, spec] : doc.at("scenarios").items()) {
      std::string where = "scenarios." + name;
      ScenarioSpec sc;
      if (spec.contains("morita")) {
        sc.morita = spec.at("morita").get<std::string>();
        lookup(ws.morita, sc.morita, "morita context");
        std::string side = jat(spec, "side", where).get<std::string>();
        if (side != "first" && side != "second")
          throw ValidationError(where + ": side must be first or second");
        sc.first_side = side == "first";
      } else {
        sc.algebra = jat(spec, "algebra", where).get<std::string>();
        const auto& alg = lookup(ws.algebras, sc.algebra, "algebra");
        sc.idempotent =
            int_list(jat(spec, "idempotent", where), where + ".idempotent");
        if (sc.idempotent.size() != alg->dim())
          throw ParseError(where + ".idempotent: wrong length");
        if (!alg->is_idempotent(to_vec(f, sc.idempotent)))
          throw ValidationError(where + ": element is not idempotent");
      }
      if (spec.contains("ambient_max_dim"))
        sc.ambient_max_dim = spec.at("ambient_max_dim").get<std::size_t>();
      if (spec.contains("side_max_dim"))
        sc.side_max_dim = spec.at("side_max_dim").get<std::size_t>();
      if (spec.contains("corner_max_dim"))
        sc.corner_max_dim = spec.at("corner_max_dim").get<std::size_t>();
      sc.u_prime = jat(spec, "u_prime", where).get<std::string>();
      sc.v_prime = jat(spec, "v_prime", where).get<std::string>();
      sc.u_dprime = jat(spec, "u_dprime", where).get<std::string>();
      sc.v_dprime = jat(spec, "v_dprime", where).get<std::string>();
      for (const auto& c : {sc.u_prime, sc.v_prime, sc.u_dprime, sc.v_dprime})
        lookup(ws.classes, c, "class");
      ws.scenarios[name] = sc;
    }

  if (doc.contains("budgets")) {
    const json& b = doc.at("budgets");
    if (b.contains("dim_cap"))
      ws.budget.dim_cap = b.at("dim_cap").get<std::size_t>();
    if (b.contains("mult_cap"))
      ws.budget.mult_cap = b.at("mult_cap").get<std::size_t>();
    if (b.contains("enum_cap"))
      ws.budget.enum_cap = b.at("enum_cap").get<std::size_t>();
    if (b.contains("seed")) ws.seed = b.at("seed").get<unsigned>();
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open workspace file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

namespace {

std::string need(const std::map<std::string, std::string>& args,
                 const std::string& key) {
  auto it = args.find(key);
  if (it == args.end()) throw ValidationError("missing argument: " + key);
  return it->second;
}

std::string get_or(const std::map<std::string, std::string>& args,
                   const std::string& key, const std::string& fallback) {
  auto it = args.find(key);
  return it == args.end() ? fallback : it->second;
}

std::vector<long long> parse_int_csv(const std::string& s) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

const char* tri_name(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    default:
      return "inconclusive";
  }
}

struct Realized {
  GluedScenario s;
  std::optional<MoritaRing> ring;
};

ModuleClass resolve_class(const Workspace& ws, const std::string& name,
                          const UniversePtr& u) {
  const ClassSpec& cs = lookup(ws.classes, name, "class");
  std::vector<ModulePtr> mods;
  if (cs.base == "all")
    mods = u->members;
  else if (cs.base == "projectives")
    mods = projectives(u->algebra);
  else if (cs.base == "injectives")
    mods = injectives(u->algebra);
  else if (cs.base == "simples")
    mods = simples(u->algebra);
  for (const auto& nm : cs.plus) {
    const ModulePtr& m = lookup(ws.modules, nm, "module");
    if (m->algebra() != u->algebra)
      throw ValidationError("class member '" + nm +
                            "' lives over a different algebra");
    mods.push_back(m);
  }
  ModuleClass c = class_from_modules(u, mods);
  if (cs.perp == "right") return right_perp(c);
  if (cs.perp == "left") return left_perp(c);
  return c;
}

Realized realize_scenario(const Workspace& ws, const std::string& name) {
  const ScenarioSpec& sp = lookup(ws.scenarios, name, "scenario");
  Realized r;
  if (!sp.morita.empty()) {
    r.ring = build_morita_ring(lookup(ws.morita, sp.morita, "morita context"));
    r.s.rec = std::make_shared<Recollement>(
        r.ring->lambda, sp.first_side ? r.ring->e_a : r.ring->e_b);
  } else {
    const auto& alg = lookup(ws.algebras, sp.algebra, "algebra");
    r.s.rec = std::make_shared<Recollement>(
        alg, to_vec(ws.field, sp.idempotent));
  }
  r.s.ambient = enumerate_universe(r.s.rec->lambda(), sp.ambient_max_dim);
  r.s.side = enumerate_universe(r.s.rec->quotient(), sp.side_max_dim);
  r.s.corner = enumerate_universe(r.s.rec->corner(), sp.corner_max_dim);
  r.s.u_prime = resolve_class(ws, sp.u_prime, r.s.side);
  r.s.v_prime = resolve_class(ws, sp.v_prime, r.s.side);
  r.s.u_dprime = resolve_class(ws, sp.u_dprime, r.s.corner);
  r.s.v_dprime = resolve_class(ws, sp.v_dprime, r.s.corner);
  return r;
}

std::shared_ptr<const Recollement> resolve_recollement(
    const Workspace& ws, const std::map<std::string, std::string>& args) {
  if (args.count("scenario"))
    return realize_scenario(ws, args.at("scenario")).s.rec;
  const auto& alg = lookup(ws.algebras, need(args, "algebra"), "algebra");
  auto coords = parse_int_csv(need(args, "idempotent"));
  if (coords.size() != alg->dim())
    throw ValidationError("idempotent has wrong length");
  return std::make_shared<Recollement>(alg, to_vec(ws.field, coords));
}

Report entry_report(const GluingReport::Entry& e) {
  Report r;
  r["asserted"] = e.asserted;
  r["status"] = tri_name(e.status);
  r["note"] = e.note;
  return r;
}

Report gluing_report(const GluingReport& g) {
  Report r;
  Report panel;
  panel["condition_p"] = g.condition_p;
  panel["vanish_l1_shriek_u"] = g.vanish_l1_shriek_u;
  panel["vanish_r1_star_v"] = g.vanish_r1_star_v;
  panel["vanish_l1_shriek_perp_v"] = g.vanish_l1_shriek_perp_v;
  panel["vanish_r1_star_u_perp"] = g.vanish_r1_star_u_perp;
  panel["side_pairs_ok"] = g.side_pairs_ok;
  r["hypothesis_panel"] = panel;
  r["glued_m_size"] = g.glued_m.indices.size();
  r["glued_n_size"] = g.glued_n.indices.size();
  Report entries;
  entries["one_sided_n"] = entry_report(g.one_sided_n);
  entries["one_sided_m"] = entry_report(g.one_sided_m);
  entries["pairs_agree"] = entry_report(g.pairs_agree);
  entries["glued_is_pair"] = entry_report(g.glued_is_pair);
  entries["heredity_forward"] = entry_report(g.heredity_forward);
  entries["heredity_backward"] = entry_report(g.heredity_backward);
  entries["completeness"] = entry_report(g.completeness);
  entries["converse_pairs"] = entry_report(g.converse_pairs);
  entries["converse_complete"] = entry_report(g.converse_complete);
  r["entries"] = entries;
  r["notes"] = g.notes;
  return r;
}

int gluing_triage(const GluingReport& g) {
  bool refuted = false, open = false;
  for (const auto* e :
       {&g.one_sided_n, &g.one_sided_m, &g.pairs_agree, &g.glued_is_pair,
        &g.heredity_forward, &g.heredity_backward, &g.completeness,
        &g.converse_pairs, &g.converse_complete}) {
    if (e->asserted && e->status == TriState::no) refuted = true;
    if (e->status == TriState::inconclusive) open = true;
  }
  return refuted ? 1 : (open ? 2 : 0);
}

}  // namespace

RunResult run(const Workspace& ws, const std::string& command,
              const std::map<std::string, std::string>& args) {
  RunResult out;
  Report& r = out.report;
  r["schema_version"] = 1;
  r["command"] = command;

  if (command == "check-algebra") {
    std::string name = need(args, "name");
    const auto& alg = lookup(ws.algebras, name, "algebra");
    auto diags = validate_algebra(*alg);
    r["algebra"] = name;
    r["dim"] = alg->dim();
    r["valid"] = diags.empty();
    r["diagnostics"] = diags;
    r["radical_dim"] = radical_basis(*alg).size();
    std::vector<std::size_t> pdims, sdims;
    for (const auto& p : projectives(alg)) pdims.push_back(p->dim());
    for (const auto& s : simples(alg)) sdims.push_back(s->dim());
    r["projective_dims"] = pdims;
    r["simple_dims"] = sdims;
    out.exit_code = diags.empty() ? 0 : 1;
    return out;
  }

  if (command == "ext") {
    const auto& src = lookup(ws.modules, need(args, "source"), "module");
    const auto& tgt = lookup(ws.modules, need(args, "target"), "module");
    if (src->algebra() != tgt->algebra())
      throw ValidationError("ext: modules live over different algebras");
    std::size_t degree = std::stoull(get_or(args, "degree", "1"));
    std::size_t dim = ext_dim(src, tgt, degree);
    std::size_t cross = ext_dim_via_duals(src, tgt, degree);
    r["source"] = args.at("source");
    r["target"] = args.at("target");
    r["degree"] = degree;
    r["dim"] = dim;
    r["cross_check_dim"] = cross;
    r["agree"] = dim == cross;
    out.exit_code = dim == cross ? 0 : 1;
    return out;
  }

  if (command == "tor") {
    const auto& bm = lookup(ws.bimodules, need(args, "bimodule"), "bimodule");
    const auto& mod = lookup(ws.modules, need(args, "module"), "module");
    if (bm->right_algebra() != mod->algebra())
      throw ValidationError(
          "tor: the bimodule's right algebra must act on the module");
    std::size_t degree = std::stoull(get_or(args, "degree", "1"));
    r["bimodule"] = args.at("bimodule");
    r["module"] = args.at("module");
    r["degree"] = degree;
    r["dim"] = tor_dim(right_structure(*bm), mod, degree);
    return out;
  }

  if (command == "recollement") {
    auto rec = resolve_recollement(ws, args);
    r["lambda_dim"] = rec->lambda()->dim();
    r["corner_dim"] = rec->corner()->dim();
    r["quotient_dim"] = rec->quotient()->dim();
    r["lambda_e_dim"] = rec->lambda_e().dim();
    r["e_lambda_dim"] = rec->e_lambda().dim();
    r["condition_p"] = rec->condition_p().holds;
    r["i_star_exact"] = rec->functor_exact(FunctorTag::i_star_upper);
    r["i_shriek_exact"] = rec->functor_exact(FunctorTag::i_shriek);
    auto seqs = rec->canonical_sequences(regular_module(rec->lambda()));
    r["canonical_first_exact"] = seqs.first_exact;
    r["canonical_second_exact"] = seqs.second_exact;
    out.exit_code = seqs.first_exact && seqs.second_exact ? 0 : 1;
    return out;
  }

  if (command == "condition-p") {
    auto rec = resolve_recollement(ws, args);
    auto rep = rec->condition_p();
    r["holds"] = rep.holds;
    r["kernel_dim"] = rep.kernel_witness.size();
    std::vector<std::vector<std::string>> witness;
    for (const auto& v : rep.kernel_witness) {
      std::vector<std::string> row;
      for (const auto& s : v) row.push_back(ws.field.to_string(s));
      witness.push_back(std::move(row));
    }
    r["kernel_witness"] = witness;
    out.exit_code = rep.holds ? 0 : 1;
    return out;
  }

  if (command == "enumerate") {
    const auto& alg = lookup(ws.algebras, need(args, "algebra"), "algebra");
    std::size_t max_dim = std::stoull(get_or(args, "max-dim", "4"));
    r["algebra"] = args.at("algebra");
    r["max_dim"] = max_dim;
    try {
      auto u = enumerate_universe(alg, max_dim);
      std::vector<std::size_t> dims;
      for (const auto& m : u->members) dims.push_back(m->dim());
      r["count"] = u->members.size();
      r["member_dims"] = dims;
    } catch (const BudgetExceeded& e) {
      r["status"] = std::string("budget exhausted: ") + e.what();
      out.exit_code = 2;
    } catch (const CapExceeded& e) {
      r["status"] = std::string("budget exhausted: ") + e.what();
      out.exit_code = 2;
    }
    return out;
  }

  if (command == "glue") {
    auto realized = realize_scenario(ws, need(args, "scenario"));
    auto rep = verify_gluing(realized.s, ws.budget);
    r["scenario"] = args.at("scenario");
    r["gluing"] = gluing_report(rep);
    out.exit_code = gluing_triage(rep);
    return out;
  }

  if (command == "corollary") {
    std::string which = need(args, "case");
    CorollaryCase c;
    if (which == "c46")
      c = CorollaryCase::c46;
    else if (which == "c47")
      c = CorollaryCase::c47;
    else if (which == "c48")
      c = CorollaryCase::c48;
    else if (which == "c49")
      c = CorollaryCase::c49;
    else
      throw ValidationError("unknown corollary case: " + which);
    auto realized = realize_scenario(ws, need(args, "scenario"));
    if (!realized.ring)
      throw ValidationError(
          "corollary: the scenario must be built from a Morita context");
    r["case"] = which;
    r["scenario"] = args.at("scenario");
    try {
      auto rep = corollary_scenario(*realized.ring, c, realized.s, ws.budget);
      r["assumption_ok"] = rep.assumption_ok;
      r["matches_derived"] = rep.matches_derived;
      r["m_class_size"] = rep.m_class.indices.size();
      r["n_class_size"] = rep.n_class.indices.size();
      r["gluing"] = gluing_report(rep.gluing);
      out.exit_code =
          rep.matches_derived ? gluing_triage(rep.gluing) : 1;
    } catch (const AssumptionFailed& e) {
      r["assumption_ok"] = false;
      r["certificate"] = e.what();
      out.exit_code = 1;
    }
    return out;
  }

  if (command == "example-4-11") {
    auto rep = example_4_11(Field::prime(2));
    r["lambda_dim"] = rep.ring.lambda->dim();
    r["universe_bound"] = rep.universe_bound;
    r["path_products_ok"] = rep.path_products_ok;
    r["tensors_vanish"] = rep.tensors_vanish;
    r["i_shriek_not_exact"] = rep.i_shriek_not_exact;
    Report first, second;
    first["matches_derived"] = rep.first.matches_derived;
    first["complete_hereditary"] = rep.first_complete_hereditary;
    first["gluing"] = gluing_report(rep.first.gluing);
    second["matches_derived"] = rep.second.matches_derived;
    second["complete_hereditary"] = rep.second_complete_hereditary;
    second["gluing"] = gluing_report(rep.second.gluing);
    r["first"] = first;
    r["second"] = second;
    bool ok = rep.path_products_ok && rep.tensors_vanish &&
              rep.i_shriek_not_exact && rep.first.matches_derived &&
              rep.second.matches_derived && rep.first_complete_hereditary &&
              rep.second_complete_hereditary;
    out.exit_code = ok ? 0 : 1;
    return out;
  }

  throw UnknownCommand("unknown command: " + command);
}

namespace {

void render_text(std::ostringstream& os, const Report& j, int indent,
                 const std::string& key) {
  std::string pad(2 * indent, ' ');
  std::string shown = key;
  for (auto& c : shown)
    if (c == '_') c = ' ';
  if (j.is_object()) {
    if (!key.empty()) os << pad << shown << ":\n";
    for (const auto& [k, v] : j.items())
      render_text(os, v, key.empty() ? indent : indent + 1, k);
  } else if (j.is_array()) {
    os << pad << shown << ": " << j.dump() << "\n";
  } else {
    os << pad << shown << ": " << (j.is_string() ? j.get<std::string>()
                                                 : j.dump())
       << "\n";
  }
}

}  // namespace

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "structured") return report.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream os;
    render_text(os, report, 0, "");
    return os.str();
  }
  throw ValidationError("unknown report format: " + format);
}

}  // namespace cotor
