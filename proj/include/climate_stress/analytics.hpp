#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "climate_stress/credit.hpp"
#include "climate_stress/valuation.hpp"

namespace climate_stress {

enum class GroupKey { geo, sector, channel };

std::string_view to_string(GroupKey k);

struct Contributor {
  std::string id;
  double el_s = 0.0;
  double share = 0.0;  // of total EL; 0 when total EL is 0

  bool operator==(const Contributor&) const = default;
};

/// Concentration and attribution of one scenario's stressed losses.
struct ExposureReport {
  std::string scenario_id;
  WeightsSource weights_source = WeightsSource::value;
  double total_el = 0.0;
  double total_ead = 0.0;
  double climate_var = 0.0;

  std::map<std::string, double> el_by_geo;
  std::map<std::string, double> el_by_sector;
  std::map<std::string, double> el_by_hazard_channel;

  // Stressed-EL concentration. Absent when total EL is 0.
  std::optional<double> hhi_geo;
  std::optional<double> hhi_sector;
  std::optional<double> hhi_channel;

  // EAD concentration for reference. Absent when total EAD is 0.
  std::optional<double> hhi_ead_geo;
  std::optional<double> hhi_ead_sector;
  std::optional<double> hhi_ead_channel;

  /// Part of total EL due to scenario LGD exceeding baseline LGD:
  /// sum(pd_s * (lgd_s - lgd0) * ead). Zero when lgd_gamma is 0.
  double collateral_uplift_el = 0.0;

  std::vector<Contributor> top_contributors;
};

/// Herfindahl index sum(s_i^2) with s_i = x_i / sum(x).
/// Throws AllZero when no entry is strictly positive, DomainError on a
/// negative entry.
double hhi(std::span<const double> basis);

/// Sums row EL per group. Throws Misalignment when rows do not match the
/// portfolio order.
std::map<std::string, double> group_el(std::span<const CreditRow> rows,
                                       const LinkedPortfolio& linked, GroupKey by);

/// The k rows with the largest EL, ties broken by ascending id.
std::vector<Contributor> top_contributors(std::span<const CreditRow> rows, std::size_t k);

/// Ratio of total EL between two results for the same scenario and equal
/// total EAD (within 1e-9 relative). Throws ScenarioMismatch, Misalignment
/// when the EAD totals differ, or ZeroDenominator.
double concentration_comparison(const StressResult& concentrated,
                                const StressResult& diversified);

/// Joins credit and valuation output into the flat per-instrument result.
StressResult assemble_result(const LinkedPortfolio& linked, const Scenario& scenario,
                             const PortfolioCredit& credit, const PortfolioValuation& valuation);

/// Where the portfolio is exposed, which hazard channels and sectors carry
/// the loss, and which counterparties contribute most.
ExposureReport exposure_summary(const LinkedPortfolio& linked, const Scenario& scenario,
                                const PortfolioCredit& credit,
                                const PortfolioValuation& valuation, std::size_t top_k = 10);

/// Credit, valuation, result and report for one scenario.
struct ScenarioOutcome {
  StressResult result;
  ExposureReport report;
};

ScenarioOutcome run_scenario(const LinkedPortfolio& linked, const Scenario& scenario,
                             std::size_t top_k = 10, Execution exec = Execution::parallel);

}  // namespace climate_stress
