#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace uavwx {

enum class RainFamily { kH, kV, alphaH, alphaV };

std::string_view to_string(RainFamily family);

/// One Gaussian term a * exp(-((log10 f - b) / c)^2).
struct GaussianTerm {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    bool operator==(const GaussianTerm&) const = default;
};

struct RainFitCurve {
    std::vector<GaussianTerm> terms;
    double slope = 0.0;      // m_k or m_alpha
    double intercept = 0.0;  // c_k or c_alpha
    bool operator==(const RainFitCurve&) const = default;
};

/// Power-law fit coefficients for the four rain families. k families carry
/// four Gaussian terms and alpha families five.
struct RainFitTable {
    std::array<RainFitCurve, 4> curves;  // indexed by RainFamily
    std::string version;
    std::string sha256;

    const RainFitCurve& curve(RainFamily family) const { return curves[static_cast<int>(family)]; }
    bool operator==(const RainFitTable&) const = default;
};

inline constexpr std::size_t expected_term_count(RainFamily family) {
    return (family == RainFamily::kH || family == RainFamily::kV) ? 4 : 5;
}

struct SpectralLine {
    double center_ghz = 0.0;
    std::array<double, 6> coeff{};  // a1..a6 (oxygen) or b1..b6 (water vapour)
    bool operator==(const SpectralLine&) const = default;
};

struct SpectroscopicLineTable {
    std::vector<SpectralLine> oxygen;
    std::vector<SpectralLine> water;
    std::string version;
    std::string sha256;
    bool operator==(const SpectroscopicLineTable&) const = default;
};

/// Parses the rain coefficient CSV (sections `family,j,a_j,b_j,c_j` and
/// `family,m,c`). Throws DataError naming the offending row, IntegrityError
/// on a checksum mismatch.
RainFitTable load_rain_fit_table(const std::filesystem::path& source);

/// Parses the `gas,f0_GHz,c1..c6` line table. Each gas list must be non-empty,
/// strictly positive and strictly ascending in center frequency.
SpectroscopicLineTable load_line_table(const std::filesystem::path& source);

/// sha256 over the non-comment lines of a data file, each terminated by '\n'.
std::string data_body_sha256(std::string_view file_content);

/// sha256 of an arbitrary byte string, lowercase hex.
std::string sha256_hex(std::string_view bytes);

/// Directory holding the shipped data files: $UAVWX_DATA_DIR if set,
/// otherwise the directory configured at build time.
std::filesystem::path default_data_dir();

std::filesystem::path default_rain_table_path();
std::filesystem::path default_line_table_path();
std::filesystem::path default_environment_path();

}  // namespace uavwx
