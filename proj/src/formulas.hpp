#pragma once

// Unchecked scalar formulas shared by the public checked entry points and
// the per-instrument kernels.

#include <algorithm>
#include <cmath>

#include "climate_stress/domain.hpp"
#include "climate_stress/scenario.hpp"

namespace climate_stress::detail {

inline double pd_exponent(double hazard, double transition, double fragility, double adaptation,
                          const BetaParams& b) {
  return b.hazard * hazard + b.transition * transition + b.fragility * fragility -
         b.adaptation * adaptation;
}

inline double pd_unclamped(double pd0, double hazard, double transition, double fragility,
                           double adaptation, const BetaParams& b) {
  return pd0 * std::exp(pd_exponent(hazard, transition, fragility, adaptation, b));
}

inline double lgd(double lgd0, double hazard, double gamma) {
  return std::min(1.0, lgd0 * (1.0 + gamma * hazard));
}

inline double repricing(double value, double hazard, double transition, double financing,
                        const RepricingParams& p) {
  double loss_fraction = p.delta_hazard * hazard + p.delta_transition * transition +
                         p.delta_financing * financing;
  return -value * std::min(1.0, loss_fraction);
}

inline double binding_hazard(const HazardVector& baseline, const HazardVector& multipliers) {
  double h = 0.0;
  for (std::size_t k = 0; k < kHazardCount; ++k) h = std::max(h, multipliers[k] * baseline[k]);
  return h;
}

}  // namespace climate_stress::detail
