#include "climate_stress/credit.hpp"

#include <cmath>
#include <string>

#include "climate_stress/error.hpp"
#include "climate_stress/kernels.hpp"
#include "formulas.hpp"

namespace climate_stress {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw StressError(ErrorCode::DomainError, what);
}

bool nonneg(double x) { return x >= 0.0 && std::isfinite(x); }
bool unit(double x) { return x >= 0.0 && x <= 1.0; }

void check_pd_args(double pd0, double hazard, double transition, double fragility,
                   double adaptation, const BetaParams& b) {
  require(unit(pd0), "pd0 must lie in [0,1]");
  require(nonneg(hazard), "hazard must be finite and >= 0");
  require(nonneg(transition), "transition must be finite and >= 0");
  require(nonneg(fragility), "fragility must be finite and >= 0");
  require(nonneg(adaptation), "adaptation must be finite and >= 0");
  require(nonneg(b.hazard) && nonneg(b.transition) && nonneg(b.fragility) &&
              nonneg(b.adaptation),
          "betas must be finite and >= 0");
}

}  // namespace

double scenario_pd_unclamped(double pd0, double hazard, double transition, double fragility,
                             double adaptation, const BetaParams& betas) {
  check_pd_args(pd0, hazard, transition, fragility, adaptation, betas);
  return detail::pd_unclamped(pd0, hazard, transition, fragility, adaptation, betas);
}

double scenario_pd(double pd0, double hazard, double transition, double fragility,
                   double adaptation, const BetaParams& betas) {
  return std::min(1.0,
                  scenario_pd_unclamped(pd0, hazard, transition, fragility, adaptation, betas));
}

double scenario_lgd(double lgd0, double hazard, double lgd_gamma) {
  require(unit(lgd0), "lgd0 must lie in [0,1]");
  require(nonneg(hazard), "hazard must be finite and >= 0");
  require(nonneg(lgd_gamma), "lgd_gamma must be finite and >= 0");
  return detail::lgd(lgd0, hazard, lgd_gamma);
}

double expected_loss(double pd, double lgd, double ead) {
  require(unit(pd), "pd must lie in [0,1]");
  require(unit(lgd), "lgd must lie in [0,1]");
  require(nonneg(ead), "ead must be finite and >= 0");
  return pd * lgd * ead;
}

double scenario_hazard(const InstrumentContext& ctx, const Scenario& scenario) {
  return detail::binding_hazard(ctx.baseline, scenario.hazard_multipliers);
}

double scenario_transition(const Instrument& x, const Scenario& scenario) {
  return scenario.transition.at(x.sector);
}

PortfolioCredit portfolio_credit(const LinkedPortfolio& linked, const Scenario& scenario,
                                 Execution exec) {
  validate_scenario(scenario);
  PortfolioCredit out;
  out.rows.resize(linked.size());
  if (exec == Execution::parallel) {
    kernels::credit_parallel(linked, scenario, out.rows);
  } else {
    kernels::credit_serial(linked, scenario, out.rows);
  }
  for (const auto& r : out.rows) out.total_el += r.el_s;
  return out;
}

}  // namespace climate_stress
