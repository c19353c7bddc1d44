#pragma once

#include <istream>
#include <ostream>
#include <vector>

#include "climate_stress/domain.hpp"

namespace climate_stress {

/// Resolved per-instrument context: what the scenario kernels read besides
/// the instrument itself.
struct InstrumentContext {
  HazardVector baseline{};  // indexed by HazardType
  double fragility = 0.0;
  Channel channel = Channel::other;
};

/// Portfolio with normalized weights and every geo reference resolved.
/// `context[i]` belongs to `portfolio.instruments[i]`.
struct LinkedPortfolio {
  Portfolio portfolio;
  std::vector<InstrumentContext> context;
  WeightsSource weights_source = WeightsSource::value;

  std::size_t size() const { return portfolio.instruments.size(); }
  const Instrument& instrument(std::size_t i) const { return portfolio.instruments[i]; }
  const std::vector<double>& weights() const { return *portfolio.weights; }
};

// CSV loaders. Errors carry the 1-based source line where one exists.

/// Header: id,geo_id,sector,ead,pd0,lgd0,value,adaptation
/// Throws MalformedRow, SchemaMismatch, InvariantViolation.
Portfolio load_portfolio(std::istream& in);

/// Header: geo_id,hazard,intensity
/// Throws DuplicateKey, UnknownHazardToken, NegativeIntensity.
HazardField load_hazard_table(std::istream& in);

/// Header: geo_id,fragility
/// Throws DuplicateKey, NegativeFragility.
FragilityTable load_fragility(std::istream& in);

/// Header: geo_id,name,channel
/// Throws DuplicateKey, UnknownChannel.
GeoRegistry load_geounits(std::istream& in);

/// Writes `portfolio` in the load_portfolio format. Numbers use the shortest
/// representation that reloads to the same double.
void write_portfolio(std::ostream& out, const Portfolio& portfolio);

/// Resolves each instrument's geo unit, all four baseline hazards and its
/// fragility; normalizes weights. Row order and numeric fields are preserved.
/// Errors carry the offending instrument's index.
/// Throws UnresolvedGeo, MissingHazard, MissingFragility.
LinkedPortfolio link_exposures(const Portfolio& portfolio, const HazardField& hazards,
                               const FragilityTable& fragility, const GeoRegistry& registry);

}  // namespace climate_stress
