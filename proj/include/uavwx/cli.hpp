#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace uavwx::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kModelError = 3,
    kDataError = 4,
};

/// Malformed command line or scenario file.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double step_or_count = 1.0;  // step for altitude/frequency ranges, point count for distances
};

struct AtmosphereSpec {
    double dry_pressure_hpa = 1013.25;
    double temperature_k = 288.15;
    double vapour_density_g_m3 = 7.5;
};

struct RadioSpec {
    double tx_power_dbm = 45.0;
    double rx_loss_db = 1.0;
    double tx_loss_db = 1.0;
    std::optional<double> noise_figure_db;  // default depends on frequency
    double bandwidth_hz = 100e6;
    double aperture_m = 0.1;
    double effective_permittivity = 1.0;
    std::optional<double> antenna_gain_db;  // default from the array design
};

/// Fully resolved inputs of one run. Echoed into every output so the run can
/// be replayed with `--config`.
struct ScenarioConfig {
    std::string command;
    std::vector<double> frequencies_ghz;
    std::optional<Range> frequency_range_ghz;
    std::vector<std::string> weather;
    double fog_temperature_k = 293.15;
    double rain_elevation_deg = 0.0;
    double rain_tilt_deg = 45.0;
    double snow_max_ghz = 200.0;
    bool allow_snow_extrapolation = false;
    AtmosphereSpec atmosphere;
    std::string environment = "urban";
    RadioSpec radio;
    double snr_min_db = 10.0;
    std::optional<double> pl_max_db;
    Range distance_m{100.0, 10000.0, 100.0};
    Range altitude_m{0.0, 5000.0, 10.0};
    std::string path_model = "mw";
    std::string format = "csv";
    std::optional<std::string> data_dir;

    /// Throws UsageError on unknown command, empty/decreasing ranges or bad format.
    void validate() const;
};

nlohmann::json to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& j);

/// Defaults of a subcommand before any flag or scenario file is applied.
ScenarioConfig default_scenario(const std::string& command);

using Cell = std::variant<std::monostate, double, std::string>;

class SweepTable {
public:
    SweepTable(std::vector<std::string> columns, std::vector<std::string> units);

    void add_row(std::vector<Cell> row);
    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    nlohmann::json metadata;  // command, config echo, data-file versions and checksums

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::string>& units() const { return units_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    const std::vector<std::string>& notes() const { return notes_; }

    std::size_t column_index(const std::string& name) const;
    double number(std::size_t row, const std::string& column) const;

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::string> units_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::string> notes_;
};

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

SweepTable run_atten(const ScenarioConfig& config);
SweepTable run_gas(const ScenarioConfig& config);
SweepTable run_pathloss(const ScenarioConfig& config);
SweepTable run_a2g(const ScenarioConfig& config);
SweepTable run_coverage(const ScenarioConfig& config);
SweepTable run_linkbudget(const ScenarioConfig& config);
SweepTable run_array(const ScenarioConfig& config);

SweepTable run_scenario(const ScenarioConfig& config);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uavwx::cli
