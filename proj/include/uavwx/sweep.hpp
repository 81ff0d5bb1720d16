#pragma once

#include <span>
#include <vector>

#include "uavwx/execution.hpp"
#include "uavwx/gas.hpp"

namespace uavwx {

/// Gas attenuation at every frequency of `frequencies`.
std::vector<GasAttenuationBreakdown> gas_attenuation_sweep(std::span<const Frequency> frequencies,
                                                           const AtmosphereState& atmosphere,
                                                           const SpectroscopicLineTable& lines,
                                                           Execution execution = Execution::parallel);

/// Inclusive grid lo, lo + step, ... <= hi (within 1e-9 step of hi).
std::vector<Frequency> frequency_grid(Frequency lo, Frequency hi, Frequency step);

}  // namespace uavwx
