#pragma once

#include "uavwx/quantities.hpp"

namespace uavwx {

/// Constant of the multi-weather free-space formula (f in MHz, d in km).
/// The analytically exact value is 20 log10(4 pi 1e9 / c0) = 32.4478 dB.
inline constexpr double kFreeSpaceConstantDb = 32.442;

struct PathLossBreakdown {
    double free_space_db = 0.0;
    double gas_db = 0.0;
    double weather_db = 0.0;
    double total_db = 0.0;
};

/// Free-space loss plus gaseous and weather terms along a line-of-sight link.
PathLossBreakdown path_loss_mw(Frequency f, Length d, AttenuationRate gas, AttenuationRate weather);

}  // namespace uavwx
