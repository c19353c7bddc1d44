#include "climate_stress/app.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "climate_stress/error.hpp"
#include "climate_stress/ingest.hpp"
#include "climate_stress/scenario.hpp"

namespace climate_stress::app {

namespace {

namespace fs = std::filesystem;

// An input failure pinned to a file.
struct InputFailure {
  std::string file;
  std::optional<std::size_t> line;
  ErrorCode code;
  std::string message;
};

[[noreturn]] void fail(const std::string& file, const StressError& e,
                       std::optional<std::size_t> line = std::nullopt) {
  throw InputFailure{file, line ? line : e.line(), e.code(), e.what()};
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{path, std::nullopt, ErrorCode::ParseError, "cannot open file"};
  return in;
}

template <typename T>
T load(const std::string& path, const std::function<T(std::istream&)>& loader) {
  auto in = open_input(path);
  try {
    return loader(in);
  } catch (const StressError& e) {
    fail(path, e);
  }
}

std::string read_text(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Data rows start on line 2; loaders reject interior blank lines.
std::size_t portfolio_line(std::size_t index) { return index + 2; }

LinkedPortfolio load_and_link(const InputPaths& p) {
  Portfolio portfolio = load<Portfolio>(p.portfolio, load_portfolio);
  HazardField hazards = load<HazardField>(p.hazards, load_hazard_table);
  FragilityTable fragility = load<FragilityTable>(p.fragility, load_fragility);
  GeoRegistry registry = load<GeoRegistry>(p.geounits, load_geounits);
  try {
    return link_exposures(portfolio, hazards, fragility, registry);
  } catch (const StressError& e) {
    std::optional<std::size_t> line;
    if (e.index()) line = portfolio_line(*e.index());
    fail(p.portfolio, e, line);
  }
}

std::vector<Scenario> collect_scenarios(const RunConfig& config) {
  std::vector<Scenario> out;
  for (const auto& path : config.scenario_paths) {
    try {
      out.push_back(parse_scenario(read_text(path)));
    } catch (const StressError& e) {
      fail(path, e);
    }
  }
  for (const auto& name : config.builtins) {
    if (name == "all") {
      for (auto& s : builtin_scenarios()) out.push_back(std::move(s));
      continue;
    }
    auto s = builtin_scenario(name);
    if (!s) {
      throw InputFailure{"--builtin", std::nullopt, ErrorCode::UnknownKind,
                         "unknown builtin '" + name +
                             "' (expected all, orderly, disorderly, physical or compound)"};
    }
    out.push_back(std::move(*s));
  }
  if (out.empty()) {
    throw InputFailure{"--scenario", std::nullopt, ErrorCode::ParseError,
                       "no scenario given; use --scenario or --builtin"};
  }
  std::set<std::string> ids;
  for (const auto& s : out) {
    if (!ids.insert(s.id).second) {
      throw InputFailure{"--scenario", std::nullopt, ErrorCode::DuplicateKey,
                         "scenario id '" + s.id + "' appears more than once"};
    }
  }
  return out;
}

void write_atomically(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    out << bytes;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("failed writing '" + tmp + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into place at '" + path + "': " + ec.message());
  }
}

void report(std::ostream& err, const InputFailure& f) {
  err << f.file;
  if (f.line) err << ':' << *f.line;
  err << ": " << to_string(f.code) << ": " << f.message << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.top_k == 0) {
      throw InputFailure{"--top-k", std::nullopt, ErrorCode::DomainError, "top-k must be >= 1"};
    }
    if (config.out_path.empty()) {
      throw InputFailure{"--out", std::nullopt, ErrorCode::ParseError, "output path is required"};
    }
    std::vector<Scenario> scenarios = collect_scenarios(config);
    LinkedPortfolio linked = load_and_link(config.inputs);

    std::vector<ScenarioOutcome> results;
    results.reserve(scenarios.size());
    for (const auto& s : scenarios) results.push_back(run_scenario(linked, s, config.top_k));

    write_atomically(config.out_path,
                     emit_report(results, ReportOptions{config.format, config.debug}));
    for (const auto& r : results) {
      out << "scenario " << r.result.scenario_id << ": total_el=" << format_number(r.result.total_el)
          << " climate_var=" << format_number(r.result.climate_var) << '\n';
    }
    return kExitOk;
  } catch (const InputFailure& f) {
    report(err, f);
    return kExitInput;
  } catch (const StressError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

int validate(const InputPaths& inputs, std::ostream& out, std::ostream& err) {
  try {
    if (inputs.hazards.empty() || inputs.fragility.empty() || inputs.geounits.empty()) {
      Portfolio p = load<Portfolio>(inputs.portfolio, load_portfolio);
      out << inputs.portfolio << ": ok (" << p.instruments.size() << " instruments)\n";
      return kExitOk;
    }
    LinkedPortfolio linked = load_and_link(inputs);
    out << inputs.portfolio << ": ok (" << linked.size() << " instruments linked)\n";
    return kExitOk;
  } catch (const InputFailure& f) {
    report(err, f);
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

void print_builtins(std::ostream& out) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& s : builtin_scenarios()) doc.push_back(nlohmann::json::parse(serialize_scenario(s)));
  out << doc.dump(2) << '\n';
}

}  // namespace climate_stress::app
