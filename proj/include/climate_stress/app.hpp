#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "climate_stress/report.hpp"

namespace climate_stress::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct InputPaths {
  std::string portfolio;
  std::string hazards;
  std::string fragility;
  std::string geounits;
};

struct RunConfig {
  InputPaths inputs;
  std::vector<std::string> scenario_paths;
  /// Builtin selectors: all, orderly, disorderly, physical, compound.
  std::vector<std::string> builtins;
  std::string out_path;
  ReportFormat format = ReportFormat::json;
  std::size_t top_k = 10;
  bool debug = false;
};

/// Loads and links the inputs once, evaluates every scenario (files first,
/// then builtins, each in the given order) and writes the report atomically
/// to `out_path`. Prints one summary line per scenario to `out` and one
/// diagnostic line to `err` on failure. Returns 0, 2 (input or validation
/// error) or 3 (internal error). No output file is left on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Loads the portfolio and, when the other three paths are set, links it.
/// Returns 0 or 2.
int validate(const InputPaths& inputs, std::ostream& out, std::ostream& err);

/// Writes the builtin scenarios as a canonical JSON array.
void print_builtins(std::ostream& out);

}  // namespace climate_stress::app
