#pragma once

#include <string>
#include <vector>

#include "climate_stress/domain.hpp"
#include "climate_stress/execution.hpp"
#include "climate_stress/ingest.hpp"
#include "climate_stress/scenario.hpp"

namespace climate_stress {

struct CreditRow {
  std::string id;
  double pd_s = 0.0;
  double lgd_s = 0.0;
  double el_s = 0.0;
  double pd_unclamped = 0.0;
};

struct PortfolioCredit {
  std::vector<CreditRow> rows;  // portfolio order
  double total_el = 0.0;        // left-to-right sum of rows
};

/// Scenario PD: min(1, pd0 * exp(b_H*H + b_T*T + b_U*U - b_A*A)).
/// Throws DomainError if pd0 is outside [0,1] or any other argument is
/// negative or non-finite.
double scenario_pd(double pd0, double hazard, double transition, double fragility,
                   double adaptation, const BetaParams& betas);

/// Same exponential form without the clamp at 1.
double scenario_pd_unclamped(double pd0, double hazard, double transition, double fragility,
                             double adaptation, const BetaParams& betas);

/// min(1, lgd0 * (1 + gamma * H)). Throws DomainError.
double scenario_lgd(double lgd0, double hazard, double lgd_gamma);

/// pd * lgd * ead. Throws DomainError on bound violations.
double expected_loss(double pd, double lgd, double ead);

/// Binding hazard for one instrument: the max over hazard types of
/// multiplier * baseline intensity.
double scenario_hazard(const InstrumentContext& ctx, const Scenario& scenario);

/// Transition intensity for a sector, falling back to the scenario default.
double scenario_transition(const Instrument& x, const Scenario& scenario);

/// Per-instrument credit rows plus the portfolio total. Both execution
/// modes produce bit-identical output.
PortfolioCredit portfolio_credit(const LinkedPortfolio& linked, const Scenario& scenario,
                                 Execution exec = Execution::parallel);

}  // namespace climate_stress
