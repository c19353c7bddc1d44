#pragma once

// Per-instrument scenario loops. The *_serial variants are the reference
// implementation; the *_parallel variants split the same loop across OpenMP
// threads. Each output slot depends only on its own instrument, so both
// produce identical rows. Inputs are assumed validated.

#include <span>

#include "climate_stress/credit.hpp"
#include "climate_stress/valuation.hpp"

namespace climate_stress::kernels {

void credit_serial(const LinkedPortfolio& linked, const Scenario& scenario,
                   std::span<CreditRow> out);
void credit_parallel(const LinkedPortfolio& linked, const Scenario& scenario,
                     std::span<CreditRow> out);

void valuation_serial(const LinkedPortfolio& linked, const Scenario& scenario,
                      std::span<ValuationRow> out);
void valuation_parallel(const LinkedPortfolio& linked, const Scenario& scenario,
                        std::span<ValuationRow> out);

/// Plain left-to-right sum.
double ordered_sum(std::span<const double> xs);

}  // namespace climate_stress::kernels
