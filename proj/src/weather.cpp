#include "uavwx/weather.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace uavwx {

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void require_window(Frequency f, const FrequencyWindow& window, const char* model) {
    if (!window.contains(f))
        throw RangeError(std::string(model) + " model valid for " + fmt_num(window.min_ghz) + "-" +
                         fmt_num(window.max_ghz) + " GHz, got " + fmt_num(f.ghz()) + " GHz");
}

void require_intensity(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be non-negative and finite, got " + std::to_string(v));
}

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

double rain_power_law(Frequency f, const RainFitTable& table, RainFamily family, FrequencyWindow window) {
    require_window(f, window, "rain power-law");
    const double x = std::log10(f.ghz());
    const auto& curve = table.curve(family);
    double sum = curve.slope * x + curve.intercept;
    for (const auto& t : curve.terms) {
        const double z = (x - t.b) / t.c;
        sum += t.a * std::exp(-z * z);
    }
    const bool is_k = family == RainFamily::kH || family == RainFamily::kV;
    return is_k ? std::pow(10.0, sum) : sum;
}

RainPowerLaw mix_polarization(double k_h, double k_v, double alpha_h, double alpha_v, PolarizationGeometry geometry) {
    if (!(k_h > 0.0 && k_v > 0.0 && alpha_h > 0.0 && alpha_v > 0.0))
        throw DomainError("polarization mixing requires positive k and alpha");
    if (!(geometry.elevation_deg >= 0.0 && geometry.elevation_deg <= 90.0) ||
        !(geometry.tilt_deg >= 0.0 && geometry.tilt_deg <= 90.0))
        throw DomainError("elevation and tilt angles must lie in [0, 90] degrees");

    const double cos_el = std::cos(deg2rad(geometry.elevation_deg));
    const double mix = cos_el * cos_el * std::cos(deg2rad(2.0 * geometry.tilt_deg));
    RainPowerLaw law;
    law.k = (k_h + k_v + (k_h - k_v) * mix) / 2.0;
    law.alpha = (k_h * alpha_h + k_v * alpha_v + (k_h * alpha_h - k_v * alpha_v) * mix) / (2.0 * law.k);
    return law;
}

RainPowerLaw rain_power_law(Frequency f, const RainFitTable& table, PolarizationGeometry geometry,
                            FrequencyWindow window) {
    return mix_polarization(rain_power_law(f, table, RainFamily::kH, window),
                            rain_power_law(f, table, RainFamily::kV, window),
                            rain_power_law(f, table, RainFamily::alphaH, window),
                            rain_power_law(f, table, RainFamily::alphaV, window), geometry);
}

AttenuationRate rain_specific_attenuation(const RainPowerLaw& law, double rate_mm_per_h) {
    require_intensity(rate_mm_per_h, "rain rate");
    if (rate_mm_per_h == 0.0) return AttenuationRate::db_per_km(0.0);
    return AttenuationRate::db_per_km(law.k * std::pow(rate_mm_per_h, law.alpha));
}

AttenuationRate rain_specific_attenuation(Frequency f, double rate_mm_per_h, PolarizationGeometry geometry,
                                          const RainFitTable& table, FrequencyWindow window) {
    require_intensity(rate_mm_per_h, "rain rate");
    return rain_specific_attenuation(rain_power_law(f, table, geometry, window), rate_mm_per_h);
}

FogPermittivity fog_permittivity(Frequency f, Temperature t, FogTemperatureWindow window) {
    if (t.kelvin() < window.min_k || t.kelvin() > window.max_k)
        throw RangeError("liquid-water permittivity model valid for " + std::to_string(window.min_k) + "-" +
                         std::to_string(window.max_k) + " K, got " + std::to_string(t.kelvin()) + " K");
    FogPermittivity p;
    p.theta = 300.0 / t.kelvin();
    const double dt = p.theta - 1.0;
    p.eps0 = 77.66 + 103.3 * dt;
    p.eps1 = 0.0671 * p.eps0;
    p.eps2 = 3.52;
    p.fp_ghz = 20.20 - 146.0 * dt + 316.0 * dt * dt;
    p.fs_ghz = 39.8 * p.fp_ghz;

    const double fg = f.ghz();
    const double rp = 1.0 + (fg / p.fp_ghz) * (fg / p.fp_ghz);
    const double rs = 1.0 + (fg / p.fs_ghz) * (fg / p.fs_ghz);
    p.eps_imag = fg * (p.eps0 - p.eps1) / (p.fp_ghz * rp) + fg * (p.eps1 - p.eps2) / (p.fs_ghz * rs);
    p.eps_real = (p.eps0 - p.eps1) / rp + (p.eps1 - p.eps2) / rs + p.eps2;
    p.eta = (2.0 + p.eps_real) / p.eps_imag;
    return p;
}

double fog_attenuation_coefficient(Frequency f, Temperature t) {
    const auto p = fog_permittivity(f, t);
    return 0.819 * f.ghz() / (p.eps_imag * (1.0 + p.eta * p.eta));
}

AttenuationRate fog_specific_attenuation(Frequency f, double liquid_water_g_m3, Temperature t) {
    require_intensity(liquid_water_g_m3, "liquid water density");
    const double kl = fog_attenuation_coefficient(f, t);
    return AttenuationRate::db_per_km(kl * liquid_water_g_m3);
}

AttenuationRate snow_specific_attenuation(Frequency f, double rate_mm_per_h, SnowModelOptions options) {
    require_intensity(rate_mm_per_h, "snowfall rate");
    if (!options.allow_extrapolation) require_window(f, options.window, "dry-snow");
    const double lambda_cm = wavelength(f).centimeters();
    const double l2 = lambda_cm * lambda_cm;
    return AttenuationRate::db_per_km(0.00349 * std::pow(rate_mm_per_h, 1.6) / (l2 * l2) +
                                      0.00224 * rate_mm_per_h / lambda_cm);
}

AttenuationRate weather_specific_attenuation(Frequency f, const WeatherCondition& weather, const RainFitTable& table,
                                             const WeatherModelOptions& options) {
    struct Visitor {
        Frequency f;
        const RainFitTable& table;
        const WeatherModelOptions& options;
        AttenuationRate operator()(const ClearSky&) const { return AttenuationRate::db_per_km(0.0); }
        AttenuationRate operator()(const Rain& r) const {
            return rain_specific_attenuation(f, r.rate_mm_per_h, r.geometry, table, options.rain_window);
        }
        AttenuationRate operator()(const Fog& fog) const {
            return fog_specific_attenuation(f, fog.liquid_water_g_m3, Temperature::kelvin(fog.temperature_k));
        }
        AttenuationRate operator()(const DrySnow& s) const {
            return snow_specific_attenuation(f, s.rate_mm_per_h, options.snow);
        }
    };
    return std::visit(Visitor{f, table, options}, weather);
}

std::string describe(const WeatherCondition& weather) {
    struct Visitor {
        std::string operator()(const ClearSky&) const { return "clear"; }
        std::string operator()(const Rain& r) const { return "rain:" + fmt_num(r.rate_mm_per_h); }
        std::string operator()(const Fog& f) const { return "fog:" + fmt_num(f.liquid_water_g_m3); }
        std::string operator()(const DrySnow& s) const { return "snow:" + fmt_num(s.rate_mm_per_h); }
    };
    return std::visit(Visitor{}, weather);
}

}  // namespace uavwx
