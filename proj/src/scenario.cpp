#include "climate_stress/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "climate_stress/error.hpp"

namespace climate_stress {

using nlohmann::json;

std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::orderly_transition: return "orderly_transition";
    case ScenarioKind::disorderly_transition: return "disorderly_transition";
    case ScenarioKind::physical_shock: return "physical_shock";
    case ScenarioKind::compound: return "compound";
  }
  return "?";
}

std::optional<ScenarioKind> parse_kind(std::string_view token) {
  for (auto k : {ScenarioKind::orderly_transition, ScenarioKind::disorderly_transition,
                 ScenarioKind::physical_shock, ScenarioKind::compound}) {
    if (to_string(k) == token) return k;
  }
  return std::nullopt;
}

double TransitionMap::at(std::string_view sector) const {
  auto it = sectors.find(sector);
  return it == sectors.end() ? default_intensity : it->second;
}

namespace {

constexpr std::string_view kDefaultKey = "default";

void require_nonnegative(double x, const std::string& path) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw StressError(ErrorCode::NegativeParameter,
                      "'" + path + "' must be finite and >= 0");
  }
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw StressError(ErrorCode::UnknownField, "unknown field '" + prefix + key + "'");
    }
  }
}

const json& object_at(const json& doc, const std::string& path) {
  if (!doc.is_object()) {
    throw StressError(ErrorCode::ParseError, "'" + path + "' must be an object");
  }
  return doc;
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw StressError(ErrorCode::ParseError, "'" + path + "' must be a number");
  }
  double x = v.get<double>();
  require_nonnegative(x, path);
  return x;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StressError(ErrorCode::ParseError,
                      "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  object_at(doc, "<document>");
  reject_unknown(doc,
                 {"id", "kind", "hazard_multipliers", "transition", "financing_tightening",
                  "lambda", "repricing", "lgd_gamma", "betas"},
                 "");

  Scenario s;
  if (!doc.contains("id") || !doc["id"].is_string() || doc["id"].get<std::string>().empty()) {
    throw StressError(ErrorCode::ParseError, "'id' is required and must be a nonempty string");
  }
  s.id = doc["id"].get<std::string>();
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw StressError(ErrorCode::ParseError, "'kind' is required and must be a string");
  }
  auto kind = parse_kind(doc["kind"].get<std::string>());
  if (!kind) {
    throw StressError(ErrorCode::UnknownKind,
                      "unknown kind '" + doc["kind"].get<std::string>() + "'");
  }
  s.kind = *kind;

  if (doc.contains("hazard_multipliers")) {
    const json& m = object_at(doc["hazard_multipliers"], "hazard_multipliers");
    for (const auto& [key, val] : m.items()) {
      auto h = parse_hazard(key);
      if (!h) {
        throw StressError(ErrorCode::UnknownHazardToken, "unknown hazard '" + key + "'");
      }
      s.hazard_multipliers[index(*h)] = number_at(val, "hazard_multipliers." + key);
    }
  }
  if (doc.contains("transition")) {
    const json& t = object_at(doc["transition"], "transition");
    for (const auto& [key, val] : t.items()) {
      double x = number_at(val, "transition." + key);
      if (key == kDefaultKey) {
        s.transition.default_intensity = x;
      } else {
        s.transition.sectors[key] = x;
      }
    }
  }
  if (doc.contains("financing_tightening")) {
    s.financing_tightening = number_at(doc["financing_tightening"], "financing_tightening");
  }
  if (doc.contains("lambda")) s.lambda = number_at(doc["lambda"], "lambda");
  if (doc.contains("lgd_gamma")) s.lgd_gamma = number_at(doc["lgd_gamma"], "lgd_gamma");
  if (doc.contains("repricing")) {
    const json& r = object_at(doc["repricing"], "repricing");
    reject_unknown(r, {"delta_hazard", "delta_transition", "delta_financing"}, "repricing.");
    if (r.contains("delta_hazard"))
      s.repricing.delta_hazard = number_at(r["delta_hazard"], "repricing.delta_hazard");
    if (r.contains("delta_transition"))
      s.repricing.delta_transition = number_at(r["delta_transition"], "repricing.delta_transition");
    if (r.contains("delta_financing"))
      s.repricing.delta_financing = number_at(r["delta_financing"], "repricing.delta_financing");
  }
  if (doc.contains("betas")) {
    const json& b = object_at(doc["betas"], "betas");
    reject_unknown(b, {"hazard", "transition", "fragility", "adaptation"}, "betas.");
    if (b.contains("hazard")) s.betas.hazard = number_at(b["hazard"], "betas.hazard");
    if (b.contains("transition")) s.betas.transition = number_at(b["transition"], "betas.transition");
    if (b.contains("fragility")) s.betas.fragility = number_at(b["fragility"], "betas.fragility");
    if (b.contains("adaptation")) s.betas.adaptation = number_at(b["adaptation"], "betas.adaptation");
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["id"] = s.id;
  doc["kind"] = std::string(to_string(s.kind));
  json mult = json::object();
  for (HazardType h : kAllHazards) {
    mult[std::string(to_string(h))] = s.hazard_multipliers[index(h)];
  }
  doc["hazard_multipliers"] = mult;
  json trans = json::object();
  trans[std::string(kDefaultKey)] = s.transition.default_intensity;
  for (const auto& [sector, x] : s.transition.sectors) trans[sector] = x;
  doc["transition"] = trans;
  doc["financing_tightening"] = s.financing_tightening;
  doc["lambda"] = s.lambda;
  doc["repricing"] = {{"delta_hazard", s.repricing.delta_hazard},
                      {"delta_transition", s.repricing.delta_transition},
                      {"delta_financing", s.repricing.delta_financing}};
  doc["lgd_gamma"] = s.lgd_gamma;
  doc["betas"] = {{"hazard", s.betas.hazard},
                  {"transition", s.betas.transition},
                  {"fragility", s.betas.fragility},
                  {"adaptation", s.betas.adaptation}};
  return doc.dump(2);
}

void validate_scenario(const Scenario& s) {
  for (HazardType h : kAllHazards) {
    require_nonnegative(s.hazard_multipliers[index(h)],
                        "hazard_multipliers." + std::string(to_string(h)));
  }
  require_nonnegative(s.transition.default_intensity, "transition.default");
  for (const auto& [sector, x] : s.transition.sectors) {
    require_nonnegative(x, "transition." + sector);
  }
  require_nonnegative(s.financing_tightening, "financing_tightening");
  require_nonnegative(s.lambda, "lambda");
  require_nonnegative(s.repricing.delta_hazard, "repricing.delta_hazard");
  require_nonnegative(s.repricing.delta_transition, "repricing.delta_transition");
  require_nonnegative(s.repricing.delta_financing, "repricing.delta_financing");
  require_nonnegative(s.lgd_gamma, "lgd_gamma");
  require_nonnegative(s.betas.hazard, "betas.hazard");
  require_nonnegative(s.betas.transition, "betas.transition");
  require_nonnegative(s.betas.fragility, "betas.fragility");
  require_nonnegative(s.betas.adaptation, "betas.adaptation");
}

Scenario compose_compound(const Scenario& physical, const Scenario& transition,
                          double financing_tightening) {
  if (physical.kind != ScenarioKind::physical_shock) {
    throw StressError(ErrorCode::KindMismatch,
                      "first input '" + physical.id + "' must be physical_shock, got " +
                          std::string(to_string(physical.kind)));
  }
  if (transition.kind != ScenarioKind::orderly_transition &&
      transition.kind != ScenarioKind::disorderly_transition) {
    throw StressError(ErrorCode::KindMismatch,
                      "second input '" + transition.id + "' must be a transition scenario, got " +
                          std::string(to_string(transition.kind)));
  }
  require_nonnegative(financing_tightening, "financing_tightening");

  Scenario out;
  out.id = physical.id + "+" + transition.id;
  out.kind = ScenarioKind::compound;
  for (std::size_t h = 0; h < kHazardCount; ++h) {
    out.hazard_multipliers[h] =
        std::max(physical.hazard_multipliers[h], transition.hazard_multipliers[h]);
  }

  out.transition.default_intensity =
      std::max(physical.transition.default_intensity, transition.transition.default_intensity);
  std::set<std::string> sectors;
  for (const auto& [k, _] : physical.transition.sectors) sectors.insert(k);
  for (const auto& [k, _] : transition.transition.sectors) sectors.insert(k);
  for (const auto& k : sectors) {
    out.transition.sectors[k] = std::max(physical.transition.at(k), transition.transition.at(k));
  }

  out.financing_tightening = financing_tightening;
  out.lambda = std::max(physical.lambda, transition.lambda);
  out.repricing = {
      std::max(physical.repricing.delta_hazard, transition.repricing.delta_hazard),
      std::max(physical.repricing.delta_transition, transition.repricing.delta_transition),
      std::max(physical.repricing.delta_financing, transition.repricing.delta_financing)};
  out.lgd_gamma = std::max(physical.lgd_gamma, transition.lgd_gamma);
  out.betas = {std::max(physical.betas.hazard, transition.betas.hazard),
               std::max(physical.betas.transition, transition.betas.transition),
               std::max(physical.betas.fragility, transition.betas.fragility),
               std::max(physical.betas.adaptation, transition.betas.adaptation)};
  return out;
}

namespace {

// Shared calibration so the builtins differ only in their shocks.
constexpr BetaParams kBuiltinBetas{1.2, 0.9, 0.5, 0.35};
constexpr double kBuiltinLambda = 1.0;
constexpr double kCompoundFinancing = 0.25;

Scenario orderly() {
  Scenario s;
  s.id = "orderly";
  s.kind = ScenarioKind::orderly_transition;
  s.transition.default_intensity = 0.15;
  s.transition.sectors = {{"energy", 0.6}, {"agriculture", 0.25}, {"real_estate", 0.1},
                          {"tourism", 0.1}};
  s.lambda = kBuiltinLambda;
  s.repricing = {0.0, 0.06, 0.05};
  s.betas = kBuiltinBetas;
  return s;
}

Scenario disorderly() {
  Scenario s;
  s.id = "disorderly";
  s.kind = ScenarioKind::disorderly_transition;
  s.transition.default_intensity = 0.4;
  s.transition.sectors = {{"energy", 1.5}, {"agriculture", 0.6}, {"real_estate", 0.3},
                          {"tourism", 0.3}};
  s.lambda = kBuiltinLambda;
  s.repricing = {0.0, 0.15, 0.1};
  s.betas = kBuiltinBetas;
  return s;
}

Scenario physical() {
  Scenario s;
  s.id = "physical";
  s.kind = ScenarioKind::physical_shock;
  s.hazard_multipliers = {2.0, 1.6, 1.8, 1.4};  // wildfire, drought, flood, heat
  s.lambda = kBuiltinLambda;
  s.repricing = {0.08, 0.0, 0.05};
  s.lgd_gamma = 0.35;
  s.betas = kBuiltinBetas;
  return s;
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
  Scenario compound = compose_compound(physical(), orderly(), kCompoundFinancing);
  compound.id = "compound";
  return {orderly(), disorderly(), physical(), std::move(compound)};
}

std::optional<Scenario> builtin_scenario(std::string_view name) {
  for (auto& s : builtin_scenarios()) {
    if (s.id == name) return s;
  }
  return std::nullopt;
}

}  // namespace climate_stress
