#include "climate_stress/kernels.hpp"

#include <cstddef>

#include "formulas.hpp"

namespace climate_stress::kernels {

namespace {

inline void credit_row(const LinkedPortfolio& linked, const Scenario& s, std::size_t i,
                       CreditRow& row) {
  const Instrument& x = linked.instrument(i);
  const InstrumentContext& ctx = linked.context[i];
  const double hazard = detail::binding_hazard(ctx.baseline, s.hazard_multipliers);
  const double transition = s.transition.at(x.sector);

  row.id = x.id;
  row.pd_unclamped =
      detail::pd_unclamped(x.pd0, hazard, transition, ctx.fragility, x.adaptation, s.betas);
  row.pd_s = std::min(1.0, row.pd_unclamped);
  row.lgd_s = detail::lgd(x.lgd0, hazard, s.lgd_gamma);
  row.el_s = row.pd_s * row.lgd_s * x.ead;
}

inline void valuation_row(const LinkedPortfolio& linked, const Scenario& s, std::size_t i,
                          ValuationRow& row) {
  const Instrument& x = linked.instrument(i);
  const double hazard = detail::binding_hazard(linked.context[i].baseline, s.hazard_multipliers);
  const double transition = s.transition.at(x.sector);

  row.id = x.id;
  row.dv_s = detail::repricing(x.value, hazard, transition, s.financing_tightening, s.repricing);
}

}  // namespace

void credit_serial(const LinkedPortfolio& linked, const Scenario& scenario,
                   std::span<CreditRow> out) {
  for (std::size_t i = 0; i < out.size(); ++i) credit_row(linked, scenario, i, out[i]);
}

void credit_parallel(const LinkedPortfolio& linked, const Scenario& scenario,
                     std::span<CreditRow> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    credit_row(linked, scenario, static_cast<std::size_t>(i), out[i]);
  }
}

void valuation_serial(const LinkedPortfolio& linked, const Scenario& scenario,
                      std::span<ValuationRow> out) {
  for (std::size_t i = 0; i < out.size(); ++i) valuation_row(linked, scenario, i, out[i]);
}

void valuation_parallel(const LinkedPortfolio& linked, const Scenario& scenario,
                        std::span<ValuationRow> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    valuation_row(linked, scenario, static_cast<std::size_t>(i), out[i]);
  }
}

double ordered_sum(std::span<const double> xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum;
}

}  // namespace climate_stress::kernels
