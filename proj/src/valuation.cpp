#include "climate_stress/valuation.hpp"

#include <cmath>

#include "climate_stress/error.hpp"
#include "climate_stress/kernels.hpp"
#include "formulas.hpp"

namespace climate_stress {

namespace {
bool nonneg(double x) { return x >= 0.0 && std::isfinite(x); }
}  // namespace

double repricing_delta(double value, double hazard, double transition, double financing,
                       const RepricingParams& params) {
  if (!nonneg(value) || !nonneg(hazard) || !nonneg(transition) || !nonneg(financing) ||
      !nonneg(params.delta_hazard) || !nonneg(params.delta_transition) ||
      !nonneg(params.delta_financing)) {
    throw StressError(ErrorCode::DomainError,
                      "repricing_delta arguments must be finite and >= 0");
  }
  return detail::repricing(value, hazard, transition, financing, params);
}

double climate_var(std::span<const double> weights, std::span<const double> dvs,
                   std::span<const double> els, double lambda) {
  if (weights.size() != dvs.size() || weights.size() != els.size()) {
    throw StressError(ErrorCode::LengthMismatch,
                      "weights, dvs and els must have equal length (" +
                          std::to_string(weights.size()) + ", " + std::to_string(dvs.size()) +
                          ", " + std::to_string(els.size()) + ")");
  }
  if (!nonneg(lambda)) {
    throw StressError(ErrorCode::DomainError, "lambda must be finite and >= 0");
  }
  double wsum = 0.0;
  for (double w : weights) {
    if (!nonneg(w)) throw StressError(ErrorCode::InvalidWeights, "weights must be >= 0");
    wsum += w;
  }
  if (!(std::fabs(wsum - 1.0) <= kWeightSumTolerance)) {
    throw StressError(ErrorCode::InvalidWeights, "weights must sum to 1");
  }

  double repricing = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) repricing += weights[i] * dvs[i];
  return repricing + lambda * kernels::ordered_sum(els);
}

PortfolioValuation portfolio_valuation(const LinkedPortfolio& linked, const Scenario& scenario,
                                       const PortfolioCredit& credit, Execution exec) {
  if (credit.rows.size() != linked.size()) {
    throw StressError(ErrorCode::Misalignment,
                      "credit rows (" + std::to_string(credit.rows.size()) +
                          ") do not match portfolio size (" + std::to_string(linked.size()) + ")");
  }
  for (std::size_t i = 0; i < linked.size(); ++i) {
    if (credit.rows[i].id != linked.instrument(i).id) {
      throw StressError(ErrorCode::Misalignment,
                        "credit row " + std::to_string(i) + " is '" + credit.rows[i].id +
                            "', expected '" + linked.instrument(i).id + "'",
                        std::nullopt, i);
    }
  }
  validate_scenario(scenario);

  PortfolioValuation out;
  out.rows.resize(linked.size());
  if (exec == Execution::parallel) {
    kernels::valuation_parallel(linked, scenario, out.rows);
  } else {
    kernels::valuation_serial(linked, scenario, out.rows);
  }

  std::vector<double> dvs(linked.size());
  std::vector<double> els(linked.size());
  for (std::size_t i = 0; i < linked.size(); ++i) {
    dvs[i] = out.rows[i].dv_s;
    els[i] = credit.rows[i].el_s;
  }
  out.climate_var = climate_var(linked.weights(), dvs, els, scenario.lambda);
  return out;
}

}  // namespace climate_stress
