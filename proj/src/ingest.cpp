#include "climate_stress/ingest.hpp"

#include <charconv>

#include "climate_stress/error.hpp"
#include "csv.hpp"

namespace climate_stress {

namespace {

const std::vector<std::string_view> kPortfolioHeader = {
    "id", "geo_id", "sector", "ead", "pd0", "lgd0", "value", "adaptation"};
const std::vector<std::string_view> kHazardHeader = {"geo_id", "hazard", "intensity"};
const std::vector<std::string_view> kFragilityHeader = {"geo_id", "fragility"};
const std::vector<std::string_view> kGeoUnitHeader = {"geo_id", "name", "channel"};

// Rethrows a table-level error with the record's line attached.
template <typename F>
void at_line(std::size_t line, F&& f) {
  try {
    f();
  } catch (const StressError& e) {
    if (e.line()) throw;
    throw StressError(e.code(), e.what(), line, e.index());
  }
}

std::string shortest(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

Portfolio load_portfolio(std::istream& in) {
  auto table = csv::read(in, kPortfolioHeader);
  Portfolio p;
  p.instruments.reserve(table.records.size());
  for (const auto& rec : table.records) {
    const auto& f = rec.fields;
    auto num = [&](std::size_t col) { return csv::parse_number(f[col], kPortfolioHeader[col], rec.line); };
    p.instruments.push_back(Instrument{f[0], f[1], f[2], num(3), num(4), num(5), num(6), num(7)});
  }

  auto violations = validate_portfolio(p);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    std::optional<std::size_t> line;
    if (v.index) line = table.records[*v.index].line;
    throw StressError(ErrorCode::InvariantViolation, describe(v), line, v.index);
  }
  return p;
}

HazardField load_hazard_table(std::istream& in) {
  auto table = csv::read(in, kHazardHeader);
  HazardField field;
  for (const auto& rec : table.records) {
    const auto& f = rec.fields;
    auto hazard = parse_hazard(f[1]);
    if (!hazard) {
      throw StressError(ErrorCode::UnknownHazardToken,
                        "unknown hazard '" + f[1] + "' (expected wildfire, drought, flood or heat)",
                        rec.line);
    }
    double intensity = csv::parse_number(f[2], "intensity", rec.line);
    at_line(rec.line, [&] { field.insert(f[0], *hazard, intensity); });
  }
  return field;
}

FragilityTable load_fragility(std::istream& in) {
  auto table = csv::read(in, kFragilityHeader);
  FragilityTable out;
  for (const auto& rec : table.records) {
    double value = csv::parse_number(rec.fields[1], "fragility", rec.line);
    at_line(rec.line, [&] { out.insert(rec.fields[0], value); });
  }
  return out;
}

GeoRegistry load_geounits(std::istream& in) {
  auto table = csv::read(in, kGeoUnitHeader);
  GeoRegistry reg;
  for (const auto& rec : table.records) {
    const auto& f = rec.fields;
    auto channel = parse_channel(f[2]);
    if (!channel) {
      throw StressError(ErrorCode::UnknownChannel,
                        "unknown channel '" + f[2] +
                            "' (expected wui, central_valley, coastal, urban_heat or other)",
                        rec.line);
    }
    at_line(rec.line, [&] { reg.add(GeoUnit{f[0], f[1], *channel}); });
  }
  return reg;
}

void write_portfolio(std::ostream& out, const Portfolio& portfolio) {
  out << "id,geo_id,sector,ead,pd0,lgd0,value,adaptation\n";
  for (const auto& x : portfolio.instruments) {
    out << csv::escape(x.id) << ',' << csv::escape(x.geo_id) << ',' << csv::escape(x.sector)
        << ',' << shortest(x.ead) << ',' << shortest(x.pd0) << ',' << shortest(x.lgd0) << ','
        << shortest(x.value) << ',' << shortest(x.adaptation) << '\n';
  }
}

LinkedPortfolio link_exposures(const Portfolio& portfolio, const HazardField& hazards,
                               const FragilityTable& fragility, const GeoRegistry& registry) {
  LinkedPortfolio linked;
  linked.weights_source = portfolio.weights ? WeightsSource::provided : WeightsSource::value;
  linked.portfolio = normalize_weights(portfolio);
  linked.context.reserve(portfolio.instruments.size());

  for (std::size_t i = 0; i < portfolio.instruments.size(); ++i) {
    const Instrument& x = portfolio.instruments[i];
    const GeoUnit* unit = registry.find(x.geo_id);
    if (unit == nullptr) {
      throw StressError(ErrorCode::UnresolvedGeo,
                        "instrument '" + x.id + "' references unknown geo '" + x.geo_id + "'",
                        std::nullopt, i);
    }
    InstrumentContext ctx;
    ctx.channel = unit->channel;
    for (HazardType h : kAllHazards) {
      if (!hazards.contains(x.geo_id, h)) {
        throw StressError(ErrorCode::MissingHazard,
                          "geo '" + x.geo_id + "' has no " + std::string(to_string(h)) +
                              " entry (required by instrument '" + x.id + "')",
                          std::nullopt, i);
      }
      ctx.baseline[index(h)] = hazards.at(x.geo_id, h);
    }
    if (!fragility.contains(x.geo_id)) {
      throw StressError(ErrorCode::MissingFragility,
                        "geo '" + x.geo_id + "' has no fragility entry (required by instrument '" +
                            x.id + "')",
                        std::nullopt, i);
    }
    ctx.fragility = fragility.at(x.geo_id);
    linked.context.push_back(ctx);
  }
  return linked;
}

}  // namespace climate_stress
