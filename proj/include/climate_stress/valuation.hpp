#pragma once

#include <span>
#include <string>
#include <vector>

#include "climate_stress/credit.hpp"

namespace climate_stress {

/// Mark-to-market repricing of one instrument; losses are negative.
struct ValuationRow {
  std::string id;
  double dv_s = 0.0;
};

struct PortfolioValuation {
  std::vector<ValuationRow> rows;  // portfolio order
  double climate_var = 0.0;
};

/// -value * min(1, dH*hazard + dT*transition + dF*financing).
/// Result lies in [-value, 0]. Throws DomainError on negative input.
double repricing_delta(double value, double hazard, double transition, double financing,
                       const RepricingParams& params);

/// sum(w_i * dv_i) + lambda * sum(el_i), each sum taken left to right.
/// Throws LengthMismatch, InvalidWeights, DomainError.
double climate_var(std::span<const double> weights, std::span<const double> dvs,
                   std::span<const double> els, double lambda);

/// Repricing rows and Climate-VaR. `credit` must be the rows computed for
/// the same portfolio, in order; throws Misalignment otherwise.
PortfolioValuation portfolio_valuation(const LinkedPortfolio& linked, const Scenario& scenario,
                                       const PortfolioCredit& credit,
                                       Execution exec = Execution::parallel);

}  // namespace climate_stress
