#include "uavwx/propagation.hpp"

#include <cmath>

namespace uavwx {

PathLossBreakdown path_loss_mw(Frequency f, Length d, AttenuationRate gas, AttenuationRate weather) {
    if (d.meters() == 0.0) throw DomainError("path loss undefined at zero distance");
    const double km = d.kilometers();
    PathLossBreakdown out;
    out.free_space_db = kFreeSpaceConstantDb + 20.0 * std::log10(f.mhz()) + 20.0 * std::log10(km);
    out.gas_db = gas.db_per_km() * km;
    out.weather_db = weather.db_per_km() * km;
    out.total_db = out.free_space_db + out.gas_db + out.weather_db;
    return out;
}

}  // namespace uavwx
