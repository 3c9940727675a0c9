#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cotor/workspace.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Verify recollement gluing of cotorsion pairs over "
      "finite-dimensional algebras"};
  app.require_subcommand(1);

  std::string workspace_path;
  std::string format = "text";
  long long budget_dim = -1, budget_mult = -1, seed = -1;

  std::map<std::string, std::string> values;
  auto common = [&](CLI::App* sub, bool needs_workspace) {
    auto* w = sub->add_option("--workspace", workspace_path,
                              "workspace JSON file");
    if (needs_workspace) w->required();
    sub->add_option("--format", format, "report format: text or structured");
    sub->add_option("--budget-dim", budget_dim,
                    "override the completeness-search dimension cap");
    sub->add_option("--budget-mult", budget_mult,
                    "override the per-member multiplicity cap");
    sub->add_option("--seed", seed, "override the workspace seed");
    return sub;
  };
  auto arg = [&](CLI::App* sub, const std::string& name, const char* help,
                 bool required = true) {
    auto* o = sub->add_option("--" + name, values[name], help);
    if (required) o->required();
  };

  auto* check = common(app.add_subcommand("check-algebra",
                                          "validate a declared algebra"),
                       true);
  arg(check, "name", "algebra name");

  auto* ext = common(
      app.add_subcommand("ext", "extension-space dimension with cross-check"),
      true);
  arg(ext, "source", "module name");
  arg(ext, "target", "module name");
  arg(ext, "degree", "cohomological degree (default 1)", false);

  auto* tor = common(app.add_subcommand("tor", "torsion-space dimension"),
                     true);
  arg(tor, "bimodule", "bimodule name (right structure is used)");
  arg(tor, "module", "module name");
  arg(tor, "degree", "homological degree (default 1)", false);

  auto* rec = common(
      app.add_subcommand("recollement",
                         "build an idempotent recollement and check the "
                         "canonical sequences"),
      true);
  arg(rec, "scenario", "scenario name", false);
  arg(rec, "algebra", "algebra name (with --idempotent)", false);
  arg(rec, "idempotent", "comma-separated coordinates", false);

  auto* condp = common(
      app.add_subcommand("condition-p",
                         "injectivity of the multiplication map from the "
                         "glued tensor into the algebra"),
      true);
  arg(condp, "scenario", "scenario name", false);
  arg(condp, "algebra", "algebra name (with --idempotent)", false);
  arg(condp, "idempotent", "comma-separated coordinates", false);

  auto* enu = common(
      app.add_subcommand("enumerate",
                         "list indecomposables up to a dimension bound"),
      true);
  arg(enu, "algebra", "algebra name");
  arg(enu, "max-dim", "dimension bound (default 4)", false);

  auto* glue = common(
      app.add_subcommand("glue", "verify the gluing of a scenario's pairs"),
      true);
  arg(glue, "scenario", "scenario name");

  auto* cor = common(
      app.add_subcommand("corollary",
                         "explicit class characterizations over a Morita "
                         "context"),
      true);
  arg(cor, "case", "one of c46, c47, c48, c49");
  arg(cor, "scenario", "Morita-based scenario name");

  common(app.add_subcommand("example-4-11",
                            "built-in worked example; needs no workspace"),
         false);

  CLI11_PARSE(app, argc, argv);

  try {
    cotor::Workspace ws;
    if (!workspace_path.empty()) ws = cotor::load_workspace(workspace_path);
    if (budget_dim >= 0) ws.budget.dim_cap = (std::size_t)budget_dim;
    if (budget_mult >= 0) ws.budget.mult_cap = (std::size_t)budget_mult;
    if (seed >= 0) ws.seed = (unsigned)seed;

    std::map<std::string, std::string> args;
    for (const auto& [k, v] : values)
      if (!v.empty()) args[k] = v;

    auto* sub = app.get_subcommands().front();
    auto result = cotor::run(ws, sub->get_name(), args);
    std::cout << cotor::emit_report(result.report, format);
    return result.exit_code;
  } catch (const cotor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
