#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "uavwx/a2g.hpp"
#include "uavwx/itu_data.hpp"

namespace test_support {

inline const uavwx::RainFitTable& rain_table() {
    static const auto t = uavwx::load_rain_fit_table(uavwx::default_rain_table_path());
    return t;
}

inline const uavwx::SpectroscopicLineTable& line_table() {
    static const auto t = uavwx::load_line_table(uavwx::default_line_table_path());
    return t;
}

inline const uavwx::A2GEnvironment& preset(const char* label) {
    static const auto presets = uavwx::load_environment_presets(uavwx::default_environment_path());
    return uavwx::find_environment(presets, label);
}

/// Writes `content` to a fresh file under the temp directory and returns its path.
inline std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "uavwx_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Seeded generator shared by the property tests.
struct Rng {
    std::mt19937_64 engine{0x5eedULL};
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
};

inline constexpr int kPropertyCases = 500;

}  // namespace test_support
