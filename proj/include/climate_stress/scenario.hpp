#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "climate_stress/domain.hpp"

namespace climate_stress {

enum class ScenarioKind { orderly_transition, disorderly_transition, physical_shock, compound };

std::string_view to_string(ScenarioKind k);
std::optional<ScenarioKind> parse_kind(std::string_view token);

/// Sector transition intensities T_j with an explicit default for sectors
/// not listed. The JSON key "default" is reserved for that default.
struct TransitionMap {
  double default_intensity = 0.0;
  std::map<std::string, double, std::less<>> sectors;

  double at(std::string_view sector) const;

  bool operator==(const TransitionMap&) const = default;
};

/// Linear repricing sensitivities to hazard, transition and financing shocks.
struct RepricingParams {
  double delta_hazard = 0.0;
  double delta_transition = 0.0;
  double delta_financing = 0.0;

  bool operator==(const RepricingParams&) const = default;
};

/// A named shock bundle. Hazard multipliers scale baseline intensity; every
/// numeric field is nonnegative. A default-constructed scenario is the
/// identity: no shock, zero betas, zero lambda.
struct Scenario {
  std::string id;
  ScenarioKind kind = ScenarioKind::physical_shock;
  HazardVector hazard_multipliers{1.0, 1.0, 1.0, 1.0};
  TransitionMap transition;
  double financing_tightening = 0.0;
  double lambda = 0.0;
  RepricingParams repricing;
  double lgd_gamma = 0.0;
  BetaParams betas;

  bool operator==(const Scenario&) const = default;
};

/// Parses a scenario JSON document; absent fields take identity defaults.
/// Throws ParseError, UnknownField, UnknownHazardToken, UnknownKind,
/// NegativeParameter.
Scenario parse_scenario(std::string_view text);

/// Canonical JSON: sorted keys, every field explicit, shortest round-trip
/// numbers. parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

/// Throws NegativeParameter naming the first offending field path.
void validate_scenario(const Scenario& s);

/// Joins a physical shock with a transition scenario under an elementwise-max
/// rule: every multiplier, transition intensity (default included), lambda,
/// repricing delta, lgd_gamma and beta is the larger of the two inputs.
/// Financing tightening is set to `financing_tightening`.
/// Throws KindMismatch or NegativeParameter.
Scenario compose_compound(const Scenario& physical, const Scenario& transition,
                          double financing_tightening);

/// Illustrative stress narratives, one per kind, in the order orderly,
/// disorderly, physical, compound. Magnitudes are defaults for exploration,
/// not calibrated values.
std::vector<Scenario> builtin_scenarios();

/// Looks up a builtin by CLI selector (orderly, disorderly, physical,
/// compound); "all" is handled by the caller.
std::optional<Scenario> builtin_scenario(std::string_view name);

}  // namespace climate_stress
