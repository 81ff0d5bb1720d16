#include <algorithm>
#include <array>

#include "uavwx/cli.hpp"

namespace uavwx::cli {

namespace {

constexpr std::array kCommands{"atten", "gas", "pathloss", "a2g", "coverage", "linkbudget", "array"};

nlohmann::json range_json(const Range& r) { return {r.lo, r.hi, r.step_or_count}; }

Range range_from(const nlohmann::json& j, const char* key) {
    if (!j.is_array() || j.size() != 3) throw UsageError(std::string("scenario field '") + key + "' must be [lo, hi, n]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key) && !j[key].is_null()) out = j[key].get<T>();
}

template <typename T>
void maybe(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key)) out = j[key].is_null() ? std::nullopt : std::optional<T>(j[key].get<T>());
}

template <typename T>
nlohmann::json opt(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void ScenarioConfig::validate() const {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        throw UsageError("unknown command '" + command + "'");
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    if (path_model != "mw" && path_model != "a2g") throw UsageError("--model must be mw or a2g");
    if (frequencies_ghz.empty() && !frequency_range_ghz) throw UsageError("no frequency given");
    for (double f : frequencies_ghz)
        if (!(f > 0.0)) throw UsageError("frequencies must be positive");
    if (frequency_range_ghz) {
        const auto& r = *frequency_range_ghz;
        if (!(r.lo > 0.0) || !(r.hi >= r.lo) || !(r.step_or_count > 0.0))
            throw UsageError("frequency range must satisfy 0 < lo <= hi with a positive step");
    }
    if (!(distance_m.lo > 0.0) || !(distance_m.hi >= distance_m.lo) || !(distance_m.step_or_count >= 1.0) ||
        (distance_m.hi > distance_m.lo && distance_m.step_or_count < 2.0))
        throw UsageError("distance range must satisfy 0 < lo <= hi with at least 2 points when lo < hi");
    if (!(altitude_m.lo >= 0.0) || !(altitude_m.hi >= altitude_m.lo) || !(altitude_m.step_or_count > 0.0))
        throw UsageError("altitude range must satisfy 0 <= lo <= hi with a positive step");
}

nlohmann::json to_json(const ScenarioConfig& c) {
    nlohmann::json j;
    j["command"] = c.command;
    j["frequencies_ghz"] = c.frequencies_ghz;
    j["frequency_range_ghz"] = c.frequency_range_ghz ? range_json(*c.frequency_range_ghz) : nlohmann::json(nullptr);
    j["weather"] = c.weather;
    j["fog_temperature_k"] = c.fog_temperature_k;
    j["rain_elevation_deg"] = c.rain_elevation_deg;
    j["rain_tilt_deg"] = c.rain_tilt_deg;
    j["snow_max_ghz"] = c.snow_max_ghz;
    j["allow_snow_extrapolation"] = c.allow_snow_extrapolation;
    j["atmosphere"] = {{"dry_pressure_hpa", c.atmosphere.dry_pressure_hpa},
                       {"temperature_k", c.atmosphere.temperature_k},
                       {"vapour_density_g_m3", c.atmosphere.vapour_density_g_m3}};
    j["environment"] = c.environment;
    j["radio"] = {{"tx_power_dbm", c.radio.tx_power_dbm},
                  {"rx_loss_db", c.radio.rx_loss_db},
                  {"tx_loss_db", c.radio.tx_loss_db},
                  {"noise_figure_db", opt(c.radio.noise_figure_db)},
                  {"bandwidth_hz", c.radio.bandwidth_hz},
                  {"aperture_m", c.radio.aperture_m},
                  {"effective_permittivity", c.radio.effective_permittivity},
                  {"antenna_gain_db", opt(c.radio.antenna_gain_db)}};
    j["snr_min_db"] = c.snr_min_db;
    j["pl_max_db"] = opt(c.pl_max_db);
    j["distance_m"] = range_json(c.distance_m);
    j["altitude_m"] = range_json(c.altitude_m);
    j["path_model"] = c.path_model;
    j["format"] = c.format;
    j["data_dir"] = opt(c.data_dir);
    return j;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("scenario must be a JSON object");
    try {
        ScenarioConfig c = default_scenario(j.value("command", std::string("atten")));
        maybe(j, "frequencies_ghz", c.frequencies_ghz);
        if (j.contains("frequency_range_ghz"))
            c.frequency_range_ghz = j["frequency_range_ghz"].is_null()
                                        ? std::nullopt
                                        : std::optional<Range>(range_from(j["frequency_range_ghz"], "frequency_range_ghz"));
        maybe(j, "weather", c.weather);
        maybe(j, "fog_temperature_k", c.fog_temperature_k);
        maybe(j, "rain_elevation_deg", c.rain_elevation_deg);
        maybe(j, "rain_tilt_deg", c.rain_tilt_deg);
        maybe(j, "snow_max_ghz", c.snow_max_ghz);
        maybe(j, "allow_snow_extrapolation", c.allow_snow_extrapolation);
        if (j.contains("atmosphere")) {
            const auto& a = j["atmosphere"];
            maybe(a, "dry_pressure_hpa", c.atmosphere.dry_pressure_hpa);
            maybe(a, "temperature_k", c.atmosphere.temperature_k);
            maybe(a, "vapour_density_g_m3", c.atmosphere.vapour_density_g_m3);
        }
        maybe(j, "environment", c.environment);
        if (j.contains("radio")) {
            const auto& r = j["radio"];
            maybe(r, "tx_power_dbm", c.radio.tx_power_dbm);
            maybe(r, "rx_loss_db", c.radio.rx_loss_db);
            maybe(r, "tx_loss_db", c.radio.tx_loss_db);
            maybe(r, "noise_figure_db", c.radio.noise_figure_db);
            maybe(r, "bandwidth_hz", c.radio.bandwidth_hz);
            maybe(r, "aperture_m", c.radio.aperture_m);
            maybe(r, "effective_permittivity", c.radio.effective_permittivity);
            maybe(r, "antenna_gain_db", c.radio.antenna_gain_db);
        }
        maybe(j, "snr_min_db", c.snr_min_db);
        maybe(j, "pl_max_db", c.pl_max_db);
        if (j.contains("distance_m")) c.distance_m = range_from(j["distance_m"], "distance_m");
        if (j.contains("altitude_m")) c.altitude_m = range_from(j["altitude_m"], "altitude_m");
        maybe(j, "path_model", c.path_model);
        maybe(j, "format", c.format);
        maybe(j, "data_dir", c.data_dir);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid scenario: ") + e.what());
    }
}

ScenarioConfig default_scenario(const std::string& command) {
    ScenarioConfig c;
    c.command = command;
    if (command == "atten") {
        c.frequencies_ghz = {2, 5, 28};
        c.weather = {"rain:12.5", "fog:0.05", "snow:5"};
        c.distance_m = {100.0, 10000.0, 100.0};
    } else if (command == "gas") {
        c.frequency_range_ghz = Range{1.0, 1000.0, 1.0};
    } else if (command == "pathloss") {
        c.frequencies_ghz = {28};
        c.weather = {"clear"};
        c.distance_m = {1000.0, 1000.0, 1.0};
    } else if (command == "a2g") {
        c.frequencies_ghz = {28};
        c.weather = {"clear"};
        c.altitude_m = {100.0, 100.0, 1.0};
        c.distance_m = {10.0, 5000.0, 100.0};
    } else if (command == "coverage") {
        c.frequencies_ghz = {28};
        c.weather = {"rain:12.5", "fog:0.05", "snow:5"};
    } else if (command == "linkbudget") {
        c.frequencies_ghz = {2, 60, 300};
        c.weather = {"clear", "rain:12.5"};
        c.distance_m = {10.0, 2000.0, 200.0};
        c.altitude_m = {100.0, 100.0, 1.0};
    } else if (command == "array") {
        c.frequencies_ghz = {2, 60, 300};
    }
    return c;
}

}  // namespace uavwx::cli
