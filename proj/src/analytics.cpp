#include "climate_stress/analytics.hpp"

#include <algorithm>
#include <cmath>

#include "climate_stress/error.hpp"

namespace climate_stress {

std::string_view to_string(GroupKey k) {
  switch (k) {
    case GroupKey::geo: return "geo";
    case GroupKey::sector: return "sector";
    case GroupKey::channel: return "channel";
  }
  return "?";
}

double hhi(std::span<const double> basis) {
  double total = 0.0;
  for (double x : basis) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw StressError(ErrorCode::DomainError, "hhi basis entries must be finite and >= 0");
    }
    total += x;
  }
  if (!(total > 0.0)) {
    throw StressError(ErrorCode::AllZero, "hhi basis has no positive entry");
  }
  double sum = 0.0;
  for (double x : basis) {
    double s = x / total;
    sum += s * s;
  }
  // Rounding can push the sum a few ulps outside [1/n, 1]; the exact value
  // never leaves it.
  return std::clamp(sum, 1.0 / static_cast<double>(basis.size()), 1.0);
}

namespace {

void check_alignment(std::span<const CreditRow> rows, const LinkedPortfolio& linked) {
  if (rows.size() != linked.size()) {
    throw StressError(ErrorCode::Misalignment,
                      "rows (" + std::to_string(rows.size()) + ") do not match portfolio size (" +
                          std::to_string(linked.size()) + ")");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].id != linked.instrument(i).id) {
      throw StressError(ErrorCode::Misalignment,
                        "row " + std::to_string(i) + " is '" + rows[i].id + "', expected '" +
                            linked.instrument(i).id + "'",
                        std::nullopt, i);
    }
  }
}

std::string group_label(const LinkedPortfolio& linked, std::size_t i, GroupKey by) {
  switch (by) {
    case GroupKey::geo: return linked.instrument(i).geo_id;
    case GroupKey::sector: return linked.instrument(i).sector;
    case GroupKey::channel: return std::string(to_string(linked.context[i].channel));
  }
  return {};
}

template <typename Value>
std::map<std::string, double> group_by(const LinkedPortfolio& linked, GroupKey by, Value value) {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < linked.size(); ++i) out[group_label(linked, i, by)] += value(i);
  return out;
}

std::optional<double> hhi_of(const std::map<std::string, double>& groups) {
  std::vector<double> xs;
  xs.reserve(groups.size());
  for (const auto& [_, x] : groups) xs.push_back(x);
  double total = 0.0;
  for (double x : xs) total += x;
  if (!(total > 0.0)) return std::nullopt;
  return hhi(xs);
}

}  // namespace

std::map<std::string, double> group_el(std::span<const CreditRow> rows,
                                       const LinkedPortfolio& linked, GroupKey by) {
  check_alignment(rows, linked);
  return group_by(linked, by, [&](std::size_t i) { return rows[i].el_s; });
}

std::vector<Contributor> top_contributors(std::span<const CreditRow> rows, std::size_t k) {
  double total = 0.0;
  for (const auto& r : rows) total += r.el_s;

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t n = std::min(k, rows.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (rows[a].el_s != rows[b].el_s) return rows[a].el_s > rows[b].el_s;
                      return rows[a].id < rows[b].id;
                    });

  std::vector<Contributor> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const CreditRow& r = rows[order[j]];
    out.push_back({r.id, r.el_s, total > 0.0 ? r.el_s / total : 0.0});
  }
  return out;
}

double concentration_comparison(const StressResult& concentrated,
                                const StressResult& diversified) {
  if (concentrated.scenario_id != diversified.scenario_id) {
    throw StressError(ErrorCode::ScenarioMismatch,
                      "results come from different scenarios ('" + concentrated.scenario_id +
                          "' vs '" + diversified.scenario_id + "')");
  }
  const double scale = std::max(std::fabs(concentrated.total_ead), std::fabs(diversified.total_ead));
  if (std::fabs(concentrated.total_ead - diversified.total_ead) > 1e-9 * scale) {
    throw StressError(ErrorCode::Misalignment, "total EAD differs between the two portfolios");
  }
  if (!(diversified.total_el > 0.0)) {
    throw StressError(ErrorCode::ZeroDenominator, "diversified portfolio has zero total EL");
  }
  return concentrated.total_el / diversified.total_el;
}

StressResult assemble_result(const LinkedPortfolio& linked, const Scenario& scenario,
                             const PortfolioCredit& credit, const PortfolioValuation& valuation) {
  check_alignment(credit.rows, linked);
  if (valuation.rows.size() != linked.size()) {
    throw StressError(ErrorCode::Misalignment, "valuation rows do not match portfolio size");
  }
  StressResult out;
  out.scenario_id = scenario.id;
  out.rows.reserve(linked.size());
  for (std::size_t i = 0; i < linked.size(); ++i) {
    const CreditRow& c = credit.rows[i];
    if (valuation.rows[i].id != c.id) {
      throw StressError(ErrorCode::Misalignment,
                        "valuation row " + std::to_string(i) + " is '" + valuation.rows[i].id +
                            "', expected '" + c.id + "'",
                        std::nullopt, i);
    }
    out.rows.push_back({c.id, c.pd_s, c.lgd_s, c.el_s, valuation.rows[i].dv_s, c.pd_unclamped});
    out.total_ead += linked.instrument(i).ead;
  }
  out.total_el = credit.total_el;
  out.climate_var = valuation.climate_var;
  return out;
}

ExposureReport exposure_summary(const LinkedPortfolio& linked, const Scenario& scenario,
                                const PortfolioCredit& credit,
                                const PortfolioValuation& valuation, std::size_t top_k) {
  check_alignment(credit.rows, linked);
  if (valuation.rows.size() != linked.size()) {
    throw StressError(ErrorCode::Misalignment, "valuation rows do not match portfolio size");
  }

  ExposureReport r;
  r.scenario_id = scenario.id;
  r.weights_source = linked.weights_source;
  r.total_el = credit.total_el;
  r.climate_var = valuation.climate_var;

  r.el_by_geo = group_el(credit.rows, linked, GroupKey::geo);
  r.el_by_sector = group_el(credit.rows, linked, GroupKey::sector);
  r.el_by_hazard_channel = group_el(credit.rows, linked, GroupKey::channel);
  r.hhi_geo = hhi_of(r.el_by_geo);
  r.hhi_sector = hhi_of(r.el_by_sector);
  r.hhi_channel = hhi_of(r.el_by_hazard_channel);

  auto ead = [&](std::size_t i) { return linked.instrument(i).ead; };
  r.hhi_ead_geo = hhi_of(group_by(linked, GroupKey::geo, ead));
  r.hhi_ead_sector = hhi_of(group_by(linked, GroupKey::sector, ead));
  r.hhi_ead_channel = hhi_of(group_by(linked, GroupKey::channel, ead));

  for (std::size_t i = 0; i < linked.size(); ++i) {
    const Instrument& x = linked.instrument(i);
    const CreditRow& c = credit.rows[i];
    r.total_ead += x.ead;
    r.collateral_uplift_el += c.pd_s * (c.lgd_s - x.lgd0) * x.ead;
  }
  r.top_contributors = top_contributors(credit.rows, top_k);
  return r;
}

ScenarioOutcome run_scenario(const LinkedPortfolio& linked, const Scenario& scenario,
                             std::size_t top_k, Execution exec) {
  PortfolioCredit credit = portfolio_credit(linked, scenario, exec);
  PortfolioValuation valuation = portfolio_valuation(linked, scenario, credit, exec);
  return {assemble_result(linked, scenario, credit, valuation),
          exposure_summary(linked, scenario, credit, valuation, top_k)};
}

}  // namespace climate_stress
