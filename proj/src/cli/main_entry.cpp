#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "uavwx/cli.hpp"
#include "uavwx/errors.hpp"

namespace uavwx::cli {

namespace {

struct Flags {
    std::vector<double> freq;
    std::string freq_range;
    std::vector<std::string> weather;
    std::string env;
    std::string atmosphere;
    std::string format;
    std::string out;
    std::string config;
    std::string data_dir;
    std::string distance;
    std::string altitude;
    std::string model;
    std::string aperture;
    double snr_min = 0, pl_max = 0, tx_power = 0, nf = 0, bandwidth = 0, eps_e = 0, gain = 0;
    double elevation = 0, tilt = 0, fog_temp = 0, snow_max_ghz = 0;
    bool allow_snow_extrapolation = false;
};

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw UsageError("cannot parse '" + std::string(text) + "' as a number for " + std::string(what));
    return v;
}

/// Length with optional unit suffix (m, km, cm, mm); bare numbers are metres.
double parse_length_m(std::string_view text, std::string_view what) {
    static constexpr std::array<std::pair<std::string_view, double>, 4> kUnits{
        {{"km", 1000.0}, {"cm", 0.01}, {"mm", 0.001}, {"m", 1.0}}};
    for (const auto& [suffix, scale] : kUnits) {
        if (text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix)
            return parse_double(text.substr(0, text.size() - suffix.size()), what) * scale;
    }
    return parse_double(text, what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

/// `lo:hi:n` or a single value `x` (read as x:x:1). The third field is
/// parsed as a plain number, the first two through `bound`.
template <typename Bound>
Range parse_range(const std::string& text, std::string_view what, Bound bound) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        const double v = bound(parts[0], what);
        return {v, v, 1.0};
    }
    if (parts.size() != 3) throw UsageError(std::string(what) + " must be lo:hi:n or a single value");
    return {bound(parts[0], what), bound(parts[1], what), parse_double(parts[2], what)};
}

AtmosphereSpec parse_atmosphere(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw UsageError("--atmosphere must be p_hPa,T_K,rho_g_m3");
    return {parse_double(parts[0], "--atmosphere"), parse_double(parts[1], "--atmosphere"),
            parse_double(parts[2], "--atmosphere")};
}

void add_flags(CLI::App& sub, Flags& f) {
    sub.add_option("--freq", f.freq, "Carrier frequencies in GHz, comma-separated")->delimiter(',');
    sub.add_option("--freq-range", f.freq_range, "Frequency grid lo:hi:step in GHz");
    sub.add_option("--weather", f.weather, "clear | rain:<mm/h> | fog:<g/m^3> | snow:<mm/h>, comma-separated")
        ->delimiter(',');
    sub.add_option("--env", f.env, "A2G environment preset");
    sub.add_option("--atmosphere", f.atmosphere, "Dry pressure hPa, temperature K, vapour density g/m^3: p,T,rho");
    sub.add_option("--format", f.format, "csv or json");
    sub.add_option("--out", f.out, "Write the table to this file instead of stdout");
    sub.add_option("--config", f.config, "JSON scenario file (e.g. the config echo of an earlier run)");
    sub.add_option("--data-dir", f.data_dir, "Directory holding the coefficient tables");
    sub.add_option("--distance", f.distance, "Ground/path distance lo:hi:n points, unit suffix m|km (default m)");
    sub.add_option("--altitude", f.altitude, "UAV altitude lo:hi:step, unit suffix m|km (default m)");
    sub.add_option("--model", f.model, "Path-loss model for linkbudget: mw or a2g");
    sub.add_option("--snr-min", f.snr_min, "Minimum SNR in dB");
    sub.add_option("--pl-max", f.pl_max, "Maximum tolerable path loss in dB (overrides --snr-min)");
    sub.add_option("--tx-power", f.tx_power, "Transmit power in dBm");
    sub.add_option("--nf", f.nf, "Receiver noise figure in dB");
    sub.add_option("--bandwidth", f.bandwidth, "Bandwidth in Hz");
    sub.add_option("--aperture", f.aperture, "Array aperture side, unit suffix m|cm|mm (default m)");
    sub.add_option("--eps-e", f.eps_e, "Effective dielectric constant of the patch substrate");
    sub.add_option("--gain", f.gain, "Antenna gain in dB at each end (overrides the array design)");
    sub.add_option("--elevation", f.elevation, "Path elevation for rain polarization, degrees");
    sub.add_option("--tilt", f.tilt, "Polarization tilt for rain, degrees (45 = circular)");
    sub.add_option("--fog-temp", f.fog_temp, "Fog temperature in K");
    sub.add_option("--snow-max-ghz", f.snow_max_ghz, "Upper frequency bound of the dry-snow model");
    sub.add_flag("--allow-snow-extrapolation", f.allow_snow_extrapolation,
                 "Evaluate dry snow outside its frequency window");
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open scenario file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("scenario file '" + path + "' is not valid JSON: " + e.what());
    }
    return scenario_from_json(j);
}

ScenarioConfig resolve(const CLI::App& sub, const Flags& f) {
    const std::string command = sub.get_name();
    ScenarioConfig c = default_scenario(command);
    if (sub.count("--config")) {
        c = load_config_file(f.config);
        if (c.command != command)
            throw UsageError("scenario file is for '" + c.command + "', not '" + command + "'");
    }
    const auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (given("--freq")) {
        c.frequencies_ghz = f.freq;
        c.frequency_range_ghz.reset();
    }
    if (given("--freq-range")) {
        c.frequency_range_ghz = parse_range(f.freq_range, "--freq-range", parse_double);
        c.frequencies_ghz.clear();
    }
    if (given("--weather")) c.weather = f.weather;
    if (given("--env")) c.environment = f.env;
    if (given("--atmosphere")) c.atmosphere = parse_atmosphere(f.atmosphere);
    if (given("--format")) c.format = f.format;
    if (given("--data-dir")) c.data_dir = f.data_dir;
    if (given("--distance")) c.distance_m = parse_range(f.distance, "--distance", parse_length_m);
    if (given("--altitude")) c.altitude_m = parse_range(f.altitude, "--altitude", parse_length_m);
    if (given("--model")) c.path_model = f.model;
    if (given("--snr-min")) c.snr_min_db = f.snr_min;
    if (given("--pl-max")) c.pl_max_db = f.pl_max;
    if (given("--tx-power")) c.radio.tx_power_dbm = f.tx_power;
    if (given("--nf")) c.radio.noise_figure_db = f.nf;
    if (given("--bandwidth")) c.radio.bandwidth_hz = f.bandwidth;
    if (given("--aperture")) c.radio.aperture_m = parse_length_m(f.aperture, "--aperture");
    if (given("--eps-e")) c.radio.effective_permittivity = f.eps_e;
    if (given("--gain")) c.radio.antenna_gain_db = f.gain;
    if (given("--elevation")) c.rain_elevation_deg = f.elevation;
    if (given("--tilt")) c.rain_tilt_deg = f.tilt;
    if (given("--fog-temp")) c.fog_temperature_k = f.fog_temp;
    if (given("--snow-max-ghz")) c.snow_max_ghz = f.snow_max_ghz;
    if (given("--allow-snow-extrapolation")) c.allow_snow_extrapolation = f.allow_snow_extrapolation;
    c.validate();
    return c;
}

void emit(const SweepTable& table, const ScenarioConfig& c, std::ostream& out) {
    if (c.format == "json")
        table.write_json(out);
    else
        table.write_csv(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weather-aware mmWave/THz UAV link and coverage calculator", "uavwx"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "uavwx 1.0.0");

    static constexpr std::array<std::pair<const char*, const char*>, 7> kCommands{{
        {"atten", "Path loss vs distance under clear, rain, fog and snow"},
        {"gas", "Oxygen and water-vapour specific attenuation vs frequency"},
        {"pathloss", "Line-of-sight path loss breakdown"},
        {"a2g", "Air-to-ground LoS/NLoS path loss vs altitude and ground radius"},
        {"coverage", "Coverage radius vs UAV altitude per weather condition"},
        {"linkbudget", "Received power, noise and SNR vs distance"},
        {"array", "Square patch-array design for a fixed aperture"},
    }};
    Flags flags;
    for (const auto& [name, desc] : kCommands) add_flags(*app.add_subcommand(name, desc), flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        app.exit(e, err, err);
        return kUsageError;
    }

    try {
        const auto config = resolve(*app.get_subcommands().front(), flags);
        const auto table = run_scenario(config);
        if (!flags.out.empty()) {
            std::ofstream file(flags.out, std::ios::binary);
            if (!file) throw UsageError("cannot write '" + flags.out + "'");
            emit(table, config, file);
        } else {
            emit(table, config, out);
        }
        return kSuccess;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError& e) {
        err << "model error: " << e.what() << '\n';
        return kModelError;
    } catch (const RangeError& e) {
        err << "model error: " << e.what() << '\n';
        return kModelError;
    }
}

}  // namespace uavwx::cli
