#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace climate_stress {

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class HazardType { wildfire = 0, drought = 1, flood = 2, heat = 3 };

inline constexpr std::size_t kHazardCount = 4;
inline constexpr std::array<HazardType, kHazardCount> kAllHazards = {
    HazardType::wildfire, HazardType::drought, HazardType::flood, HazardType::heat};

/// One value per hazard type, indexed by `index(HazardType)`.
using HazardVector = std::array<double, kHazardCount>;

constexpr std::size_t index(HazardType h) { return static_cast<std::size_t>(h); }

std::string_view to_string(HazardType h);
/// Lowercase tokens only; returns nullopt for anything outside the closed set.
std::optional<HazardType> parse_hazard(std::string_view token);

/// Regional transmission channel of a geographic unit.
enum class Channel { wui, central_valley, coastal, urban_heat, other };

std::string_view to_string(Channel c);
std::optional<Channel> parse_channel(std::string_view token);

// ---------------------------------------------------------------------------
// Geography and hazard inputs
// ---------------------------------------------------------------------------

struct GeoUnit {
  std::string id;
  std::string name;
  Channel channel = Channel::other;

  bool operator==(const GeoUnit&) const = default;
};

/// Geographic units keyed by id. Ids are nonempty and unique.
class GeoRegistry {
 public:
  GeoRegistry() = default;
  explicit GeoRegistry(std::vector<GeoUnit> units);

  /// Throws DuplicateKey or InvariantViolation (empty id).
  void add(GeoUnit unit);
  const GeoUnit* find(std::string_view id) const;
  std::size_t size() const { return units_.size(); }
  const std::vector<GeoUnit>& units() const { return units_; }

 private:
  std::vector<GeoUnit> units_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// Baseline hazard intensities keyed by (geo_id, hazard). Lookup of an
/// absent pair throws MissingHazard; there is no implicit zero.
class HazardField {
 public:
  /// Throws DuplicateKey or NegativeIntensity.
  void insert(const std::string& geo_id, HazardType hazard, double intensity);
  bool contains(std::string_view geo_id, HazardType hazard) const;
  double at(std::string_view geo_id, HazardType hazard) const;
  std::size_t size() const { return count_; }

 private:
  using Slots = std::array<std::optional<double>, kHazardCount>;
  const Slots* slots(std::string_view geo_id) const;

  std::unordered_map<std::string, Slots> entries_;
  std::size_t count_ = 0;
};

/// Local economic fragility per geographic unit.
class FragilityTable {
 public:
  /// Throws DuplicateKey or NegativeFragility.
  void insert(const std::string& geo_id, double fragility);
  bool contains(std::string_view geo_id) const;
  /// Throws MissingFragility.
  double at(std::string_view geo_id) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::unordered_map<std::string, double> values_;
};

// ---------------------------------------------------------------------------
// Portfolio
// ---------------------------------------------------------------------------

struct Instrument {
  std::string id;
  std::string geo_id;
  std::string sector;
  double ead = 0.0;
  double pd0 = 0.0;
  double lgd0 = 0.0;
  double value = 0.0;
  double adaptation = 0.0;

  bool operator==(const Instrument&) const = default;
};

struct Portfolio {
  std::vector<Instrument> instruments;
  /// Mandate weights when supplied by the caller; value weights otherwise.
  std::optional<std::vector<double>> weights;

  bool operator==(const Portfolio&) const = default;
};

inline constexpr double kWeightSumTolerance = 1e-9;

struct Violation {
  std::string instrument_id;  // empty for portfolio-level rules
  std::string field;
  std::string rule;
  std::optional<std::size_t> index;

  bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

/// Checks every Instrument and Portfolio invariant. Violations are data;
/// this never throws.
std::vector<Violation> validate_portfolio(const Portfolio& portfolio);

/// Validates and returns the portfolio, or throws InvariantViolation naming
/// the first violation.
Portfolio make_portfolio(std::vector<Instrument> instruments,
                         std::optional<std::vector<double>> weights = std::nullopt);

/// Derives value weights w_i = value_i / sum(value) when weights are absent.
/// Valid provided weights are returned unchanged.
/// Throws ZeroTotalValue or InvalidWeights.
Portfolio normalize_weights(const Portfolio& portfolio);

enum class WeightsSource { value, provided };
std::string_view to_string(WeightsSource s);

// ---------------------------------------------------------------------------
// Parameters and results
// ---------------------------------------------------------------------------

/// Sensitivities of scenario PD. All four are nonnegative; the adaptation
/// term enters with a minus sign.
struct BetaParams {
  double hazard = 0.0;
  double transition = 0.0;
  double fragility = 0.0;
  double adaptation = 0.0;

  bool operator==(const BetaParams&) const = default;
};

struct StressRow {
  std::string id;
  double pd_s = 0.0;
  double lgd_s = 0.0;
  double el_s = 0.0;
  double dv_s = 0.0;
  /// Scenario PD before clamping at 1; debug output only.
  double pd_unclamped = 0.0;
};

struct StressResult {
  std::string scenario_id;
  std::vector<StressRow> rows;  // portfolio order
  double total_el = 0.0;
  double total_ead = 0.0;
  double climate_var = 0.0;
};

}  // namespace climate_stress
