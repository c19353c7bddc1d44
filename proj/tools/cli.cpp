#include "cli.hpp"

#include <map>

#include <CLI11.hpp>

#include "climate_stress/app.hpp"

namespace climate_stress::cli {

namespace {

void add_inputs(CLI::App* cmd, app::InputPaths& paths, bool required) {
  cmd->add_option("--portfolio", paths.portfolio, "portfolio CSV")->required();
  auto* h = cmd->add_option("--hazards", paths.hazards, "baseline hazard CSV");
  auto* f = cmd->add_option("--fragility", paths.fragility, "fragility CSV");
  auto* g = cmd->add_option("--geounits", paths.geounits, "geographic unit CSV");
  if (required) {
    h->required();
    f->required();
    g->required();
  }
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App root{"Geospatial climate stress testing for located credit portfolios", "stress"};
  root.require_subcommand(1);

  app::RunConfig config;
  auto* run = root.add_subcommand("run", "evaluate scenarios and write a report");
  add_inputs(run, config.inputs, true);
  run->add_option("--scenario", config.scenario_paths, "scenario JSON file (repeatable)");
  run->add_option("--builtin", config.builtins,
                  "builtin scenario: all, orderly, disorderly, physical, compound (repeatable)");
  run->add_option("--out", config.out_path, "report path")->required();
  run->add_option("--format", config.format, "json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ReportFormat>{{"json", ReportFormat::json},
                                              {"csv", ReportFormat::csv}},
          CLI::ignore_case));
  run->add_option("--top-k", config.top_k, "ranked contributors per scenario")
      ->check(CLI::PositiveNumber);
  run->add_flag("--debug", config.debug, "include unclamped scenario PD per row");

  auto* scenarios = root.add_subcommand("scenarios", "inspect builtin scenarios");
  scenarios->require_subcommand(1);
  auto* print = scenarios->add_subcommand("print", "emit the builtins as canonical JSON");

  app::InputPaths validate_inputs;
  auto* validate = root.add_subcommand("validate", "check input files without evaluating");
  add_inputs(validate, validate_inputs, false);

  try {
    root.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = root.exit(e, out, err);
    return code == 0 ? 0 : app::kExitInput;
  }

  if (run->parsed()) return app::run(config, out, err);
  if (print->parsed()) {
    app::print_builtins(out);
    return app::kExitOk;
  }
  if (validate->parsed()) return app::validate(validate_inputs, out, err);
  return app::kExitInput;
}

}  // namespace climate_stress::cli
