#pragma once

#include <string>
#include <variant>

#include "uavwx/itu_data.hpp"
#include "uavwx/quantities.hpp"

namespace uavwx {

/// Path elevation and polarization tilt, both in degrees within [0, 90].
/// The default (0, 45) is circular polarization on a horizontal path.
struct PolarizationGeometry {
    double elevation_deg = 0.0;
    double tilt_deg = 45.0;

    static PolarizationGeometry horizontal() { return {0.0, 0.0}; }
    static PolarizationGeometry vertical() { return {0.0, 90.0}; }
    static PolarizationGeometry circular() { return {0.0, 45.0}; }
};

struct RainPowerLaw {
    double k = 0.0;
    double alpha = 0.0;
};

struct FrequencyWindow {
    double min_ghz = 1.0;
    double max_ghz = 1000.0;
    bool contains(Frequency f) const { return f.ghz() >= min_ghz && f.ghz() <= max_ghz; }
};

/// Evaluates one fitted coefficient curve. k families return 10^(sum),
/// alpha families the sum itself. Outside `window` throws RangeError.
double rain_power_law(Frequency f, const RainFitTable& table, RainFamily family,
                      FrequencyWindow window = {});

/// Combines horizontal/vertical coefficients for an arbitrary path geometry.
RainPowerLaw mix_polarization(double k_h, double k_v, double alpha_h, double alpha_v,
                              PolarizationGeometry geometry);

RainPowerLaw rain_power_law(Frequency f, const RainFitTable& table, PolarizationGeometry geometry,
                            FrequencyWindow window = {});

/// gamma_R = k R^alpha for an already-resolved power law.
AttenuationRate rain_specific_attenuation(const RainPowerLaw& law, double rate_mm_per_h);

AttenuationRate rain_specific_attenuation(Frequency f, double rate_mm_per_h, PolarizationGeometry geometry,
                                          const RainFitTable& table, FrequencyWindow window = {});

/// Double-Debye permittivity of liquid water plus its intermediate constants.
struct FogPermittivity {
    double eps_real = 0.0;  // epsilon'
    double eps_imag = 0.0;  // epsilon''
    double eta = 0.0;       // (2 + epsilon') / epsilon''
    double theta = 0.0;     // 300 / T
    double eps0 = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double fp_ghz = 0.0;    // primary relaxation frequency
    double fs_ghz = 0.0;    // secondary relaxation frequency
};

inline constexpr double kDefaultFogTemperatureK = 293.15;

/// Liquid-water temperature window for the permittivity model, in K.
struct FogTemperatureWindow {
    double min_k = 253.15;
    double max_k = 313.15;
};

FogPermittivity fog_permittivity(Frequency f, Temperature t, FogTemperatureWindow window = {});

/// Specific attenuation coefficient K_l in (dB/km)/(g/m^3).
double fog_attenuation_coefficient(Frequency f, Temperature t);

AttenuationRate fog_specific_attenuation(Frequency f, double liquid_water_g_m3,
                                         Temperature t = Temperature::kelvin(kDefaultFogTemperatureK));

struct SnowModelOptions {
    FrequencyWindow window{1.0, 200.0};
    bool allow_extrapolation = false;
};

/// Dry-snow attenuation from snowfall rate (mm/h); wavelength from c0/f in cm.
AttenuationRate snow_specific_attenuation(Frequency f, double rate_mm_per_h, SnowModelOptions options = {});

struct ClearSky {};
struct Rain {
    double rate_mm_per_h = 0.0;
    PolarizationGeometry geometry{};
};
struct Fog {
    double liquid_water_g_m3 = 0.0;
    double temperature_k = kDefaultFogTemperatureK;
};
struct DrySnow {
    double rate_mm_per_h = 0.0;
};

using WeatherCondition = std::variant<ClearSky, Rain, Fog, DrySnow>;

struct WeatherModelOptions {
    FrequencyWindow rain_window{};
    SnowModelOptions snow{};
};

/// gamma for any weather condition; clear sky is 0 dB/km.
AttenuationRate weather_specific_attenuation(Frequency f, const WeatherCondition& weather, const RainFitTable& table,
                                             const WeatherModelOptions& options = {});

std::string describe(const WeatherCondition& weather);

}  // namespace uavwx
