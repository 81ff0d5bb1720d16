#pragma once

#include "uavwx/quantities.hpp"

namespace uavwx {

inline constexpr double kNoiseTemperatureK = 298.15;
inline constexpr double kDefaultBandwidthHz = 100e6;
inline constexpr double kRegulatoryCapDbm = 45.0;

struct RadioSystem {
    Frequency frequency = Frequency::ghz(60.0);
    DecibelMilliwatts tx_power{45.0};
    Decibels rx_front_end_loss{1.0};
    Decibels tx_front_end_loss{1.0};
    Decibels noise_figure{2.0};
    double bandwidth_hz = kDefaultBandwidthHz;
    Length aperture_side = Length::centimeters(10.0);
    double effective_permittivity = 1.0;

    /// Throws DomainError on P_t above the cap, negative losses or NF,
    /// non-positive bandwidth or aperture, or eps_e < 1.
    void validate(double tx_cap_dbm = kRegulatoryCapDbm) const;
};

/// Noise figure used when none is given: 1 dB up to 6 GHz, 2 dB up to
/// 100 GHz and 6.5 dB above.
Decibels default_noise_figure(Frequency f);

RadioSystem default_radio_system(Frequency f);

struct ArrayDesign {
    int elements_per_side = 1;
    int element_count = 1;
    Decibels gain{4.0};
};

/// Guided wavelength c0 / (f sqrt(eps_e)); eps_e < 1 throws DomainError.
Length effective_wavelength(Frequency f, double effective_permittivity);

/// Largest square half-wavelength-spaced array fitting in a W x W aperture,
/// with gain 4 + 10 log10(N).
ArrayDesign array_design(Frequency f, Length aperture_side, double effective_permittivity);

DecibelMilliwatts received_power(const RadioSystem& system, Decibels tx_gain, Decibels rx_gain, Decibels path_loss);

/// 10 log10(k T B) + NF + 30 dBm.
DecibelMilliwatts noise_power(const RadioSystem& system, double temperature_k = kNoiseTemperatureK);

inline Decibels snr(DecibelMilliwatts received, DecibelMilliwatts noise) { return received - noise; }

}  // namespace uavwx
