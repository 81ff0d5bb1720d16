#include "uavwx/gas.hpp"

#include <cmath>

namespace uavwx {

namespace {

constexpr FrequencyWindow kGasWindow{1.0, 1000.0};

// Oxygen lines plus the dry-air continuum (Debye spectrum of oxygen and
// pressure-induced nitrogen absorption).
double oxygen_refractivity(double f, double p, double e, double theta, const std::vector<SpectralLine>& lines) {
    double n = 0.0;
    for (const auto& line : lines) {
        const auto& a = line.coeff;
        const double f0 = line.center_ghz;
        const double strength = a[0] * 1e-7 * p * theta * theta * theta * std::exp(a[1] * (1.0 - theta));
        double width = a[2] * 1e-4 * (p * std::pow(theta, 0.8 - a[3]) + 1.1 * e * theta);
        width = std::sqrt(width * width + 2.25e-6);  // Zeeman splitting floor
        const double interference = (a[4] + a[5] * theta) * 1e-4 * (p + e) * std::pow(theta, 0.8);
        const double lo = f0 - f;
        const double hi = f0 + f;
        const double shape = f / f0 *
                             ((width - interference * lo) / (lo * lo + width * width) +
                              (width - interference * hi) / (hi * hi + width * width));
        n += strength * shape;
    }
    const double d = 5.6e-4 * (p + e) * std::pow(theta, 0.8);
    const double continuum = f * p * theta * theta *
                             (6.14e-5 / (d * (1.0 + (f / d) * (f / d))) +
                              1.4e-12 * p * std::pow(theta, 1.5) / (1.0 + 1.9e-5 * std::pow(f, 1.5)));
    return n + continuum;
}

double water_refractivity(double f, double p, double e, double theta, const std::vector<SpectralLine>& lines) {
    if (e == 0.0) return 0.0;
    double n = 0.0;
    for (const auto& line : lines) {
        const auto& b = line.coeff;
        const double f0 = line.center_ghz;
        const double strength = b[0] * 1e-1 * e * std::pow(theta, 3.5) * std::exp(b[1] * (1.0 - theta));
        double width = b[2] * 1e-4 * (p * std::pow(theta, b[3]) + b[4] * e * std::pow(theta, b[5]));
        // Doppler broadening
        width = 0.535 * width + std::sqrt(0.217 * width * width + 2.1316e-12 * f0 * f0 / theta);
        const double lo = f0 - f;
        const double hi = f0 + f;
        const double shape = f / f0 * (width / (lo * lo + width * width) + width / (hi * hi + width * width));
        n += strength * shape;
    }
    return n;
}

}  // namespace

void AtmosphereState::validate() const {
    const double t = temperature.kelvin();
    if (!(t > 150.0 && t < 350.0))
        throw DomainError("atmosphere temperature must lie in (150, 350) K, got " + std::to_string(t));
    if (!(vapour_density_g_m3 >= 0.0) || !std::isfinite(vapour_density_g_m3))
        throw DomainError("water-vapour density must be non-negative, got " + std::to_string(vapour_density_g_m3));
}

double refractivity_imag(Frequency f, const AtmosphereState& atmosphere, Gas gas, const SpectroscopicLineTable& lines) {
    if (!kGasWindow.contains(f))
        throw RangeError("gas model valid for 1-1000 GHz, got " + std::to_string(f.ghz()) + " GHz");
    atmosphere.validate();
    const double t = atmosphere.temperature.kelvin();
    const double theta = 300.0 / t;
    const double p = atmosphere.dry_pressure.hectopascals();
    const double e = atmosphere.vapour_density_g_m3 * t / 216.7;  // vapour partial pressure, hPa
    return gas == Gas::oxygen ? oxygen_refractivity(f.ghz(), p, e, theta, lines.oxygen)
                              : water_refractivity(f.ghz(), p, e, theta, lines.water);
}

GasAttenuationBreakdown gas_specific_attenuation(Frequency f, const AtmosphereState& atmosphere,
                                                 const SpectroscopicLineTable& lines) {
    const double scale = 0.1820 * f.ghz();
    GasAttenuationBreakdown out;
    out.oxygen = AttenuationRate::db_per_km(scale * refractivity_imag(f, atmosphere, Gas::oxygen, lines));
    out.water_vapour = AttenuationRate::db_per_km(scale * refractivity_imag(f, atmosphere, Gas::water_vapour, lines));
    out.total = out.oxygen + out.water_vapour;
    return out;
}

}  // namespace uavwx
