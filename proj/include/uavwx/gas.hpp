#pragma once

#include "uavwx/itu_data.hpp"
#include "uavwx/quantities.hpp"
#include "uavwx/weather.hpp"

namespace uavwx {

/// Ground-level atmosphere applied along the whole path.
/// `dry_pressure` is the dry-air partial pressure p of the line model.
struct AtmosphereState {
    Pressure dry_pressure = Pressure::hectopascals(1013.25);
    Temperature temperature = Temperature::kelvin(288.15);
    double vapour_density_g_m3 = 7.5;

    /// Throws DomainError unless pressure > 0, 150 K < T < 350 K, vapour density >= 0.
    void validate() const;
};

enum class Gas { oxygen, water_vapour };

struct GasAttenuationBreakdown {
    AttenuationRate oxygen;
    AttenuationRate water_vapour;
    AttenuationRate total;
};

/// Imaginary part N'' of the complex refractivity contributed by one gas
/// (oxygen includes the dry-air continuum). Valid 1-1000 GHz.
double refractivity_imag(Frequency f, const AtmosphereState& atmosphere, Gas gas,
                         const SpectroscopicLineTable& lines);

/// beta = 0.1820 f (N''_ox + N''_wv), f in GHz, dB/km.
GasAttenuationBreakdown gas_specific_attenuation(Frequency f, const AtmosphereState& atmosphere,
                                                 const SpectroscopicLineTable& lines);

}  // namespace uavwx
