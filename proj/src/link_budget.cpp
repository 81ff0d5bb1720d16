#include "uavwx/link_budget.hpp"

#include <algorithm>
#include <cmath>

namespace uavwx {

void RadioSystem::validate(double tx_cap_dbm) const {
    if (tx_power.value > tx_cap_dbm)
        throw DomainError("transmit power " + std::to_string(tx_power.value) + " dBm exceeds the " +
                          std::to_string(tx_cap_dbm) + " dBm cap");
    if (rx_front_end_loss.value < 0.0 || tx_front_end_loss.value < 0.0)
        throw DomainError("front-end losses must be non-negative");
    if (noise_figure.value < 0.0) throw DomainError("noise figure must be non-negative");
    if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be positive");
    if (!(aperture_side.meters() > 0.0)) throw DomainError("aperture side must be positive");
    if (!(effective_permittivity >= 1.0)) throw DomainError("effective dielectric constant must be >= 1");
}

Decibels default_noise_figure(Frequency f) {
    if (f.ghz() <= 6.0) return {1.0};
    if (f.ghz() <= 100.0) return {2.0};
    return {6.5};
}

RadioSystem default_radio_system(Frequency f) {
    RadioSystem sys;
    sys.frequency = f;
    sys.noise_figure = default_noise_figure(f);
    return sys;
}

Length effective_wavelength(Frequency f, double effective_permittivity) {
    if (!(effective_permittivity >= 1.0))
        throw DomainError("effective dielectric constant must be >= 1, got " + std::to_string(effective_permittivity));
    return Length::meters(kSpeedOfLight / (f.hz() * std::sqrt(effective_permittivity)));
}

ArrayDesign array_design(Frequency f, Length aperture_side, double effective_permittivity) {
    if (!(aperture_side.meters() > 0.0)) throw DomainError("aperture side must be positive");
    // The element itself (lambda_e / 2) always fits inside its lambda / 2 cell.
    (void)effective_wavelength(f, effective_permittivity);
    const double per_side = 2.0 * aperture_side.meters() / wavelength(f).meters();
    // 1e-9 guards against 2W/lambda landing a hair under an integer.
    const int n_side = std::max(1, static_cast<int>(std::floor(per_side + 1e-9)));
    ArrayDesign design;
    design.elements_per_side = n_side;
    design.element_count = n_side * n_side;
    design.gain = {4.0 + 10.0 * std::log10(static_cast<double>(design.element_count))};
    return design;
}

DecibelMilliwatts received_power(const RadioSystem& system, Decibels tx_gain, Decibels rx_gain, Decibels path_loss) {
    if (path_loss.value < 0.0) throw DomainError("path loss must be non-negative");
    return system.tx_power - system.rx_front_end_loss - system.tx_front_end_loss + rx_gain + tx_gain - path_loss;
}

DecibelMilliwatts noise_power(const RadioSystem& system, double temperature_k) {
    if (!(system.bandwidth_hz > 0.0)) throw DomainError("bandwidth must be positive");
    return {10.0 * std::log10(kBoltzmann * temperature_k * system.bandwidth_hz) + system.noise_figure.value + 30.0};
}

}  // namespace uavwx
