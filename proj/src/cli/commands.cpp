#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "uavwx/a2g.hpp"
#include "uavwx/cli.hpp"
#include "uavwx/coverage.hpp"
#include "uavwx/gas.hpp"
#include "uavwx/itu_data.hpp"
#include "uavwx/link_budget.hpp"
#include "uavwx/propagation.hpp"
#include "uavwx/sweep.hpp"
#include "uavwx/weather.hpp"

namespace uavwx::cli {

namespace {

constexpr const char* kGenerator = "uavwx 1.0.0";
constexpr const char* kWeatherGrammar =
    "weather spec must be one of: clear | rain:<mm/h> | fog:<g/m^3> | snow:<mm/h> (comma-separated list)";

struct Context {
    RainFitTable rain;
    SpectroscopicLineTable lines;
    std::vector<A2GEnvironment> environments;
    nlohmann::json data;
};

std::string file_sha256(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

Context load_context(const ScenarioConfig& cfg) {
    const std::filesystem::path dir = cfg.data_dir ? std::filesystem::path(*cfg.data_dir) : default_data_dir();
    Context ctx;
    ctx.rain = load_rain_fit_table(dir / default_rain_table_path().filename());
    ctx.lines = load_line_table(dir / default_line_table_path().filename());
    const auto env_path = dir / default_environment_path().filename();
    ctx.environments = load_environment_presets(env_path);
    ctx.data = {{"rain_fit", {{"version", ctx.rain.version}, {"sha256", ctx.rain.sha256}}},
                {"line_table", {{"version", ctx.lines.version}, {"sha256", ctx.lines.sha256}}},
                {"environments", {{"sha256", file_sha256(env_path)}}}};
    return ctx;
}

SweepTable make_table(const ScenarioConfig& cfg, const Context& ctx, std::vector<std::string> columns,
                      std::vector<std::string> units) {
    SweepTable t(std::move(columns), std::move(units));
    t.metadata["generator"] = kGenerator;
    t.metadata["command"] = cfg.command;
    t.metadata["config"] = to_json(cfg);
    t.metadata["data"] = ctx.data;
    return t;
}

double parse_intensity(const std::string& spec, std::string_view value) {
    double v = 0.0;
    std::size_t used = 0;
    try {
        v = std::stod(std::string(value), &used);
    } catch (const std::exception&) {
        throw UsageError("invalid weather spec '" + spec + "'; " + kWeatherGrammar);
    }
    if (used != value.size()) throw UsageError("invalid weather spec '" + spec + "'; " + kWeatherGrammar);
    return v;
}

WeatherCondition parse_weather(const std::string& spec, const ScenarioConfig& cfg) {
    if (spec == "clear") return ClearSky{};
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("invalid weather spec '" + spec + "'; " + kWeatherGrammar);
    const auto kind = spec.substr(0, colon);
    const double v = parse_intensity(spec, std::string_view(spec).substr(colon + 1));
    if (kind == "rain") return Rain{v, PolarizationGeometry{cfg.rain_elevation_deg, cfg.rain_tilt_deg}};
    if (kind == "fog") return Fog{v, cfg.fog_temperature_k};
    if (kind == "snow") return DrySnow{v};
    throw UsageError("invalid weather spec '" + spec + "'; " + kWeatherGrammar);
}

std::vector<WeatherCondition> parse_weather_list(const ScenarioConfig& cfg) {
    if (cfg.weather.empty()) throw UsageError(kWeatherGrammar);
    std::vector<WeatherCondition> out;
    for (const auto& s : cfg.weather) out.push_back(parse_weather(s, cfg));
    return out;
}

/// One weather condition per column slot: clear, rain, fog, snow. Slots the
/// user did not request stay clear.
std::array<WeatherCondition, 4> weather_slots(const ScenarioConfig& cfg) {
    std::array<WeatherCondition, 4> slots{ClearSky{}, ClearSky{}, ClearSky{}, ClearSky{}};
    std::array<bool, 4> seen{};
    for (const auto& w : parse_weather_list(cfg)) {
        const auto idx = w.index();
        if (idx == 0) continue;
        if (seen[idx]) throw UsageError("weather kind given twice in '--weather'");
        seen[idx] = true;
        slots[idx] = w;
    }
    return slots;
}

WeatherModelOptions weather_options(const ScenarioConfig& cfg) {
    WeatherModelOptions o;
    o.snow.window.max_ghz = cfg.snow_max_ghz;
    o.snow.allow_extrapolation = cfg.allow_snow_extrapolation;
    return o;
}

AtmosphereState atmosphere(const ScenarioConfig& cfg) {
    AtmosphereState a;
    a.dry_pressure = Pressure::hectopascals(cfg.atmosphere.dry_pressure_hpa);
    a.temperature = Temperature::kelvin(cfg.atmosphere.temperature_k);
    a.vapour_density_g_m3 = cfg.atmosphere.vapour_density_g_m3;
    a.validate();
    return a;
}

std::vector<Frequency> frequencies(const ScenarioConfig& cfg) {
    std::vector<Frequency> out;
    if (!cfg.frequencies_ghz.empty()) {
        for (double f : cfg.frequencies_ghz) out.push_back(Frequency::ghz(f));
        return out;
    }
    const auto& r = *cfg.frequency_range_ghz;
    return frequency_grid(Frequency::ghz(r.lo), Frequency::ghz(r.hi), Frequency::ghz(r.step_or_count));
}

std::vector<Length> distances(const ScenarioConfig& cfg) {
    const auto n = static_cast<std::size_t>(cfg.distance_m.step_or_count);
    std::vector<Length> out;
    if (n <= 1 || cfg.distance_m.hi == cfg.distance_m.lo) {
        out.push_back(Length::meters(cfg.distance_m.lo));
        return out;
    }
    const double step = (cfg.distance_m.hi - cfg.distance_m.lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Length::meters(i + 1 == n ? cfg.distance_m.hi : cfg.distance_m.lo + static_cast<double>(i) * step));
    return out;
}

std::vector<Length> altitudes(const ScenarioConfig& cfg) {
    return altitude_grid(Length::meters(cfg.altitude_m.lo), Length::meters(cfg.altitude_m.hi),
                         Length::meters(cfg.altitude_m.step_or_count));
}

RadioSystem radio_system(const ScenarioConfig& cfg, Frequency f) {
    RadioSystem sys = default_radio_system(f);
    sys.tx_power = {cfg.radio.tx_power_dbm};
    sys.rx_front_end_loss = {cfg.radio.rx_loss_db};
    sys.tx_front_end_loss = {cfg.radio.tx_loss_db};
    if (cfg.radio.noise_figure_db) sys.noise_figure = {*cfg.radio.noise_figure_db};
    sys.bandwidth_hz = cfg.radio.bandwidth_hz;
    sys.aperture_side = Length::meters(cfg.radio.aperture_m);
    sys.effective_permittivity = cfg.radio.effective_permittivity;
    sys.validate();
    return sys;
}

Decibels antenna_gain(const ScenarioConfig& cfg, const RadioSystem& sys) {
    if (cfg.radio.antenna_gain_db) return {*cfg.radio.antenna_gain_db};
    return array_design(sys.frequency, sys.aperture_side, sys.effective_permittivity).gain;
}

std::string kv(const std::string& key, double v) { return key + "=" + format_number(v); }

}  // namespace

SweepTable run_atten(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto slots = weather_slots(cfg);
    const auto atmos = atmosphere(cfg);
    const auto opts = weather_options(cfg);
    auto t = make_table(cfg, ctx, {"freq_ghz", "distance_km", "pl_clear_db", "pl_rain_db", "pl_fog_db", "pl_snow_db"},
                        {"GHz", "km", "dB", "dB", "dB", "dB"});
    const auto ds = distances(cfg);
    for (const auto f : frequencies(cfg)) {
        const auto beta = gas_specific_attenuation(f, atmos, ctx.lines).total;
        std::array<AttenuationRate, 4> gamma;
        for (std::size_t k = 0; k < slots.size(); ++k)
            gamma[k] = weather_specific_attenuation(f, slots[k], ctx.rain, opts);
        t.add_note(kv("freq_ghz", f.ghz()) + " " + kv("beta_db_km", beta.db_per_km()) + " " +
                   kv("gamma_rain_db_km", gamma[1].db_per_km()) + " " + kv("gamma_fog_db_km", gamma[2].db_per_km()) +
                   " " + kv("gamma_snow_db_km", gamma[3].db_per_km()));
        for (const auto d : ds) {
            std::vector<Cell> row{f.ghz(), d.kilometers()};
            for (const auto g : gamma) row.emplace_back(path_loss_mw(f, d, beta, g).total_db);
            t.add_row(std::move(row));
        }
    }
    return t;
}

SweepTable run_gas(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto fs = frequencies(cfg);
    const auto result = gas_attenuation_sweep(fs, atmosphere(cfg), ctx.lines, Execution::parallel);
    auto t = make_table(cfg, ctx, {"freq_ghz", "beta_o_db_km", "beta_w_db_km", "beta_db_km"},
                        {"GHz", "dB/km", "dB/km", "dB/km"});
    for (std::size_t i = 0; i < fs.size(); ++i)
        t.add_row({fs[i].ghz(), result[i].oxygen.db_per_km(), result[i].water_vapour.db_per_km(),
                   result[i].total.db_per_km()});
    return t;
}

SweepTable run_pathloss(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto atmos = atmosphere(cfg);
    const auto opts = weather_options(cfg);
    const auto weather = parse_weather_list(cfg);
    auto t = make_table(cfg, ctx,
                        {"freq_ghz", "weather", "distance_km", "free_space_db", "gas_db", "weather_db", "total_db"},
                        {"GHz", "-", "km", "dB", "dB", "dB", "dB"});
    const auto ds = distances(cfg);
    for (const auto f : frequencies(cfg)) {
        const auto beta = gas_specific_attenuation(f, atmos, ctx.lines).total;
        for (std::size_t w = 0; w < weather.size(); ++w) {
            const auto gamma = weather_specific_attenuation(f, weather[w], ctx.rain, opts);
            for (const auto d : ds) {
                const auto pl = path_loss_mw(f, d, beta, gamma);
                t.add_row({f.ghz(), cfg.weather[w], d.kilometers(), pl.free_space_db, pl.gas_db, pl.weather_db,
                           pl.total_db});
            }
        }
    }
    return t;
}

SweepTable run_a2g(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto atmos = atmosphere(cfg);
    const auto opts = weather_options(cfg);
    const auto weather = parse_weather_list(cfg);
    const auto& env = find_environment(ctx.environments, cfg.environment);
    auto t = make_table(cfg, ctx,
                        {"freq_ghz", "weather", "h_m", "r_m", "d_m", "elevation_deg", "p_los", "pl_los_db",
                         "pl_nlos_db", "pl_aerial_db", "pl_aerial_mw_db"},
                        {"GHz", "-", "m", "m", "m", "deg", "-", "dB", "dB", "dB", "dB"});
    const auto hs = altitudes(cfg);
    const auto rs = distances(cfg);
    for (const auto f : frequencies(cfg)) {
        const auto beta = gas_specific_attenuation(f, atmos, ctx.lines).total;
        for (std::size_t w = 0; w < weather.size(); ++w) {
            const auto gamma = weather_specific_attenuation(f, weather[w], ctx.rain, opts);
            for (const auto h : hs) {
                for (const auto r : rs) {
                    const auto d = slant_distance(h, r);
                    const auto p = los_probability(h, r, env);
                    const auto pl = los_nlos_path_loss(f, d, env);
                    t.add_row({f.ghz(), cfg.weather[w], h.meters(), r.meters(), d.meters(), elevation_deg(h, r), p.los,
                               pl.los_db, pl.nlos_db, aerial_path_loss(h, r, f, env, beta).value,
                               aerial_path_loss_weather(h, r, f, env, beta, gamma).value});
                }
            }
        }
    }
    return t;
}

SweepTable run_coverage(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto slots = weather_slots(cfg);
    const auto atmos = atmosphere(cfg);
    const auto opts = weather_options(cfg);
    const auto& env = find_environment(ctx.environments, cfg.environment);
    const auto hs = altitudes(cfg);
    static constexpr std::array<const char*, 4> kSlotNames{"clear", "rain", "fog", "snow"};

    auto t = make_table(
        cfg, ctx,
        {"freq_ghz", "h_m", "radius_clear_m", "radius_rain_m", "radius_fog_m", "radius_snow_m", "status"},
        {"GHz", "m", "m", "m", "m", "m", "-"});

    for (const auto f : frequencies(cfg)) {
        const auto sys = radio_system(cfg, f);
        const auto gain = antenna_gain(cfg, sys);
        const Decibels pl_max = cfg.pl_max_db ? Decibels{*cfg.pl_max_db} : max_path_loss(sys, gain, gain, {cfg.snr_min_db});
        const auto beta = gas_specific_attenuation(f, atmos, ctx.lines).total;

        std::array<std::optional<CoverageCurve>, 4> curves;
        std::array<std::string, 4> unavailable;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            AttenuationRate gamma;
            try {
                gamma = weather_specific_attenuation(f, slots[k], ctx.rain, opts);
            } catch (const RangeError& e) {
                unavailable[k] = "out-of-validity";
                t.add_note(kv("freq_ghz", f.ghz()) + " weather=" + describe(slots[k]) + " omitted: " + e.what());
                continue;
            }
            CoverageModel model{f, env, beta, gamma};
            curves[k] = coverage_curve(hs, pl_max, model, SolverOptions{}, Execution::parallel);
            std::string note = kv("freq_ghz", f.ghz()) + " weather=" + describe(slots[k]) + " " +
                               kv("beta_db_km", beta.db_per_km()) + " " + kv("gamma_db_km", gamma.db_per_km()) + " " +
                               kv("pl_max_db", pl_max.value);
            if (curves[k]->empty())
                note += " no-reachable-altitude";
            else
                note += " " + kv("argmax_h_m", curves[k]->best().altitude.meters()) + " " +
                        kv("max_radius_m", curves[k]->best().radius.meters());
            t.add_note(note);
        }

        for (std::size_t i = 0; i < hs.size(); ++i) {
            std::vector<Cell> row{f.ghz(), hs[i].meters()};
            std::string status;
            for (std::size_t k = 0; k < 4; ++k) {
                std::string problem = unavailable[k];
                if (curves[k]) {
                    const auto& o = curves[k]->outcomes[i];
                    if (o.point)
                        row.emplace_back(o.point->radius.meters());
                    else
                        problem = std::string(to_string(o.status));
                }
                if (!problem.empty()) {
                    if (!curves[k] || !curves[k]->outcomes[i].point) row.emplace_back(std::monostate{});
                    status += (status.empty() ? "" : ";") + std::string(kSlotNames[k]) + ":" + problem;
                }
            }
            row.emplace_back(status.empty() ? std::string("ok") : status);
            t.add_row(std::move(row));
        }
    }
    return t;
}

SweepTable run_linkbudget(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    const auto atmos = atmosphere(cfg);
    const auto opts = weather_options(cfg);
    const auto weather = parse_weather_list(cfg);
    const bool a2g = cfg.path_model == "a2g";
    const A2GEnvironment* env = a2g ? &find_environment(ctx.environments, cfg.environment) : nullptr;
    const auto h = Length::meters(cfg.altitude_m.lo);

    auto t = make_table(cfg, ctx,
                        {"freq_ghz", "weather", "distance_m", "pl_db", "pr_dbm", "noise_dbm", "snr_db"},
                        {"GHz", "-", "m", "dB", "dBm", "dBm", "dB"});
    const auto ds = distances(cfg);
    for (const auto f : frequencies(cfg)) {
        const auto sys = radio_system(cfg, f);
        const auto design = array_design(f, sys.aperture_side, sys.effective_permittivity);
        const auto gain = antenna_gain(cfg, sys);
        const auto noise = noise_power(sys);
        t.add_note(kv("freq_ghz", f.ghz()) + " " + kv("n_side", design.elements_per_side) + " " +
                   kv("n_ant", design.element_count) + " " + kv("array_gain_db", design.gain.value) + " " +
                   kv("gain_used_db", gain.value) + " " + kv("noise_figure_db", sys.noise_figure.value) + " " +
                   kv("noise_dbm", noise.value));
        const auto beta = gas_specific_attenuation(f, atmos, ctx.lines).total;
        for (std::size_t w = 0; w < weather.size(); ++w) {
            const auto gamma = weather_specific_attenuation(f, weather[w], ctx.rain, opts);
            for (const auto d : ds) {
                const Decibels pl = a2g ? aerial_path_loss_weather(h, d, f, *env, beta, gamma)
                                        : Decibels{path_loss_mw(f, d, beta, gamma).total_db};
                const auto pr = received_power(sys, gain, gain, pl);
                t.add_row({f.ghz(), cfg.weather[w], d.meters(), pl.value, pr.value, noise.value, snr(pr, noise).value});
            }
        }
    }
    return t;
}

SweepTable run_array(const ScenarioConfig& cfg) {
    const auto ctx = load_context(cfg);
    auto t = make_table(cfg, ctx, {"freq_ghz", "lambda_mm", "lambda_e_mm", "n_side", "n_ant", "gain_db"},
                        {"GHz", "mm", "mm", "-", "-", "dB"});
    for (const auto f : frequencies(cfg)) {
        const auto design = array_design(f, Length::meters(cfg.radio.aperture_m), cfg.radio.effective_permittivity);
        t.add_row({f.ghz(), wavelength(f).millimeters(),
                   effective_wavelength(f, cfg.radio.effective_permittivity).millimeters(),
                   static_cast<double>(design.elements_per_side), static_cast<double>(design.element_count),
                   design.gain.value});
    }
    return t;
}

SweepTable run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    static const std::map<std::string, SweepTable (*)(const ScenarioConfig&)> dispatch{
        {"atten", run_atten},       {"gas", run_gas},           {"pathloss", run_pathloss}, {"a2g", run_a2g},
        {"coverage", run_coverage}, {"linkbudget", run_linkbudget}, {"array", run_array}};
    return dispatch.at(cfg.command)(cfg);
}

}  // namespace uavwx::cli
