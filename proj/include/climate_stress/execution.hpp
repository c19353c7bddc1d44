#pragma once

namespace climate_stress {

/// Selects the serial reference loop or the OpenMP loop for per-instrument
/// kernels. Totals are reduced in portfolio order either way.
enum class Execution { serial, parallel };

}  // namespace climate_stress
