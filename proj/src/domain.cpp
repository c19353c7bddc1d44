#include "climate_stress/domain.hpp"

#include <cmath>
#include <unordered_set>

#include "climate_stress/error.hpp"

namespace climate_stress {

std::string_view to_string(HazardType h) {
  switch (h) {
    case HazardType::wildfire: return "wildfire";
    case HazardType::drought: return "drought";
    case HazardType::flood: return "flood";
    case HazardType::heat: return "heat";
  }
  return "?";
}

std::optional<HazardType> parse_hazard(std::string_view token) {
  for (HazardType h : kAllHazards) {
    if (to_string(h) == token) return h;
  }
  return std::nullopt;
}

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::wui: return "wui";
    case Channel::central_valley: return "central_valley";
    case Channel::coastal: return "coastal";
    case Channel::urban_heat: return "urban_heat";
    case Channel::other: return "other";
  }
  return "?";
}

std::optional<Channel> parse_channel(std::string_view token) {
  for (Channel c : {Channel::wui, Channel::central_valley, Channel::coastal,
                    Channel::urban_heat, Channel::other}) {
    if (to_string(c) == token) return c;
  }
  return std::nullopt;
}

std::string_view to_string(WeightsSource s) {
  return s == WeightsSource::value ? "value" : "provided";
}

// --- GeoRegistry -----------------------------------------------------------

GeoRegistry::GeoRegistry(std::vector<GeoUnit> units) {
  for (auto& u : units) add(std::move(u));
}

void GeoRegistry::add(GeoUnit unit) {
  if (unit.id.empty()) {
    throw StressError(ErrorCode::InvariantViolation, "geo unit id must be nonempty");
  }
  if (by_id_.count(unit.id) != 0) {
    throw StressError(ErrorCode::DuplicateKey, "duplicate geo unit '" + unit.id + "'");
  }
  by_id_.emplace(unit.id, units_.size());
  units_.push_back(std::move(unit));
}

const GeoUnit* GeoRegistry::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &units_[it->second];
}

// --- HazardField -----------------------------------------------------------

void HazardField::insert(const std::string& geo_id, HazardType hazard, double intensity) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
    throw StressError(ErrorCode::NegativeIntensity,
                      "intensity for (" + geo_id + ", " + std::string(to_string(hazard)) +
                          ") must be finite and >= 0");
  }
  auto& slot = entries_[geo_id][index(hazard)];
  if (slot.has_value()) {
    throw StressError(ErrorCode::DuplicateKey,
                      "duplicate hazard entry (" + geo_id + ", " +
                          std::string(to_string(hazard)) + ")");
  }
  slot = intensity;
  ++count_;
}

const HazardField::Slots* HazardField::slots(std::string_view geo_id) const {
  auto it = entries_.find(std::string(geo_id));
  return it == entries_.end() ? nullptr : &it->second;
}

bool HazardField::contains(std::string_view geo_id, HazardType hazard) const {
  const Slots* s = slots(geo_id);
  return s != nullptr && (*s)[index(hazard)].has_value();
}

double HazardField::at(std::string_view geo_id, HazardType hazard) const {
  const Slots* s = slots(geo_id);
  if (s == nullptr || !(*s)[index(hazard)].has_value()) {
    throw StressError(ErrorCode::MissingHazard,
                      "no " + std::string(to_string(hazard)) + " entry for geo '" +
                          std::string(geo_id) + "'");
  }
  return *(*s)[index(hazard)];
}

// --- FragilityTable --------------------------------------------------------

void FragilityTable::insert(const std::string& geo_id, double fragility) {
  if (!(fragility >= 0.0) || !std::isfinite(fragility)) {
    throw StressError(ErrorCode::NegativeFragility,
                      "fragility for '" + geo_id + "' must be finite and >= 0");
  }
  if (!values_.emplace(geo_id, fragility).second) {
    throw StressError(ErrorCode::DuplicateKey, "duplicate fragility entry '" + geo_id + "'");
  }
}

bool FragilityTable::contains(std::string_view geo_id) const {
  return values_.count(std::string(geo_id)) != 0;
}

double FragilityTable::at(std::string_view geo_id) const {
  auto it = values_.find(std::string(geo_id));
  if (it == values_.end()) {
    throw StressError(ErrorCode::MissingFragility,
                      "no fragility entry for geo '" + std::string(geo_id) + "'");
  }
  return it->second;
}

// --- Portfolio validation --------------------------------------------------

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }
bool nonnegative(double x) { return x >= 0.0 && std::isfinite(x); }

void check_weights(const Portfolio& p, std::vector<Violation>& out) {
  if (!p.weights) return;
  const auto& w = *p.weights;
  if (w.size() != p.instruments.size()) {
    out.push_back({"", "weights", "weights length = N", std::nullopt});
    return;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!nonnegative(w[i])) {
      out.push_back({p.instruments[i].id, "weight", "w_i ≥ 0", i});
    }
    sum += w[i];
  }
  if (!(std::fabs(sum - 1.0) <= kWeightSumTolerance)) {
    out.push_back({"", "weights", "Σw_i = 1", std::nullopt});
  }
}

}  // namespace

std::string describe(const Violation& v) {
  std::string s;
  if (!v.instrument_id.empty()) s += "instrument '" + v.instrument_id + "': ";
  s += v.field + " violates " + v.rule;
  return s;
}

std::vector<Violation> validate_portfolio(const Portfolio& portfolio) {
  std::vector<Violation> out;
  const auto& xs = portfolio.instruments;
  if (xs.empty()) {
    out.push_back({"", "instruments", "N ≥ 1", std::nullopt});
  }

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Instrument& x = xs[i];
    auto flag = [&](const char* field, const char* rule) {
      out.push_back({x.id, field, rule, i});
    };
    if (x.id.empty()) flag("id", "id nonempty");
    if (x.geo_id.empty()) flag("geo_id", "geo_id nonempty");
    if (!in_unit_interval(x.pd0)) flag("pd0", "pd0 ∈ [0,1]");
    if (!in_unit_interval(x.lgd0)) flag("lgd0", "lgd0 ∈ [0,1]");
    if (!nonnegative(x.ead)) flag("ead", "ead ≥ 0");
    if (!nonnegative(x.value)) flag("value", "value ≥ 0");
    if (!nonnegative(x.adaptation)) flag("adaptation", "adaptation ≥ 0");
    if (!x.id.empty() && !seen.insert(x.id).second) flag("id", "id unique within portfolio");
  }
  check_weights(portfolio, out);
  return out;
}

Portfolio make_portfolio(std::vector<Instrument> instruments,
                         std::optional<std::vector<double>> weights) {
  Portfolio p{std::move(instruments), std::move(weights)};
  auto violations = validate_portfolio(p);
  if (!violations.empty()) {
    throw StressError(ErrorCode::InvariantViolation, describe(violations.front()),
                      std::nullopt, violations.front().index);
  }
  return p;
}

Portfolio normalize_weights(const Portfolio& portfolio) {
  if (portfolio.weights) {
    std::vector<Violation> bad;
    check_weights(portfolio, bad);
    if (!bad.empty()) {
      throw StressError(ErrorCode::InvalidWeights, describe(bad.front()), std::nullopt,
                        bad.front().index);
    }
    return portfolio;
  }

  double total = 0.0;
  for (const auto& x : portfolio.instruments) total += x.value;
  if (!(total > 0.0)) {
    throw StressError(ErrorCode::ZeroTotalValue,
                      "cannot derive value weights: total instrument value is 0");
  }
  std::vector<double> w;
  w.reserve(portfolio.instruments.size());
  for (const auto& x : portfolio.instruments) w.push_back(x.value / total);

  Portfolio out = portfolio;
  out.weights = std::move(w);
  return out;
}

}  // namespace climate_stress
