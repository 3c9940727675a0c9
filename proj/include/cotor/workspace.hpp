#pragma once

#include <map>
#include <string>

#include "cotor/morita.hpp"
#include "json.hpp"

namespace cotor {

struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct DanglingReference : Error {
  using Error::Error;
};
struct UnknownCommand : Error {
  using Error::Error;
};

/// A named subcategory recipe, resolved against a universe when used:
/// base in {all, none, projectives, injectives, simples}, plus named
/// modules, optionally followed by an Ext-orthogonal ("right"/"left" perp).
struct ClassSpec {
  std::string base = "all";
  std::vector<std::string> plus;
  std::string perp;  // "", "right", or "left"
};

/// A recollement with candidate pairs, by reference. Either an algebra
/// name with an explicit idempotent, or a Morita context with a side.
struct ScenarioSpec {
  std::string algebra;  // empty when morita-based
  std::vector<long long> idempotent;
  std::string morita;
  bool first_side = true;
  std::size_t ambient_max_dim = 4;
  std::size_t side_max_dim = 2;
  std::size_t corner_max_dim = 2;
  std::string u_prime, v_prime, u_dprime, v_dprime;  // class names
};

struct Workspace {
  int schema_version = 1;
  Field field = Field::rationals();
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, BimodulePtr> bimodules;
  std::map<std::string, MoritaData> morita;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, ClassSpec> classes;
  std::map<std::string, ScenarioSpec> scenarios;
  SearchBudget budget;
  unsigned seed = 0;
};

/// Parse and fully validate a workspace document. Diagnostics name the
/// offending section and entry.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

using Report = nlohmann::ordered_json;

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 refuted (certificate in report), 2 budget
  Report report;
};

/// Dispatch one command against a workspace. Commands: check-algebra, ext,
/// tor, recollement, condition-p, enumerate, glue, corollary, example-4-11.
RunResult run(const Workspace& ws, const std::string& command,
              const std::map<std::string, std::string>& args);

/// Render a report. "structured" is JSON and round-trips; "text" is a
/// stable indented key-value rendering. Both are byte-deterministic.
std::string emit_report(const Report& report, const std::string& format);

}  // namespace cotor
