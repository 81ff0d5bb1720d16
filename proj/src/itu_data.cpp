#include "uavwx/itu_data.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "uavwx/errors.hpp"

#ifndef UAVWX_DATA_DIR
#define UAVWX_DATA_DIR "data"
#endif

namespace uavwx {

namespace {

struct DataLine {
    int number = 0;  // 1-based line number in the file
    std::string text;
};

struct DataFile {
    std::string content;
    std::vector<std::string> comments;
    std::vector<DataLine> rows;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

DataFile read_data_file(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw DataError("cannot open data file " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();

    DataFile file;
    file.content = buf.str();
    std::istringstream lines(file.content);
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.starts_with("#")) {
            file.comments.push_back(line);
        } else if (!trim(line).empty()) {
            file.rows.push_back({number, line});
        }
    }
    if (file.rows.empty()) throw DataError(source.string() + ": file has no data rows");
    return file;
}

std::optional<std::string> comment_value(const DataFile& file, std::string_view key) {
    for (const auto& c : file.comments) {
        auto body = std::string_view(c).substr(1);
        body.remove_prefix(std::min(body.find_first_not_of(' '), body.size()));
        if (body.starts_with(key) && body.size() > key.size() && body[key.size()] == ':')
            return trim(body.substr(key.size() + 1));
    }
    return std::nullopt;
}

/// Validates the `# sha256:` line if present; returns the computed digest.
std::string check_integrity(const DataFile& file, const std::filesystem::path& source) {
    const auto digest = data_body_sha256(file.content);
    if (const auto recorded = comment_value(file, "sha256"); recorded && *recorded != digest)
        throw IntegrityError(source.string() + ": checksum mismatch (recorded " + *recorded + ", computed " + digest +
                             ")");
    return digest;
}

[[noreturn]] void row_error(const std::filesystem::path& source, const DataLine& row, const std::string& what) {
    throw DataError(source.string() + ":" + std::to_string(row.number) + ": " + what + " in row '" + row.text + "'");
}

double parse_number(const std::string& field, const std::filesystem::path& source, const DataLine& row) {
    double v = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (!field.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) row_error(source, row, "invalid number '" + field + "'");
    return v;
}

std::optional<RainFamily> parse_family(std::string_view s) {
    if (s == "kH") return RainFamily::kH;
    if (s == "kV") return RainFamily::kV;
    if (s == "alphaH") return RainFamily::alphaH;
    if (s == "alphaV") return RainFamily::alphaV;
    return std::nullopt;
}

}  // namespace

std::string_view to_string(RainFamily family) {
    switch (family) {
        case RainFamily::kH: return "kH";
        case RainFamily::kV: return "kV";
        case RainFamily::alphaH: return "alphaH";
        case RainFamily::alphaV: return "alphaV";
    }
    return "?";
}

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
        throw std::runtime_error("sha256 computation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

std::string data_body_sha256(std::string_view file_content) {
    std::string body;
    std::size_t pos = 0;
    while (pos < file_content.size()) {
        auto nl = file_content.find('\n', pos);
        if (nl == std::string_view::npos) nl = file_content.size();
        auto line = file_content.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.starts_with("#")) {
            body.append(line);
            body.push_back('\n');
        }
        pos = nl + 1;
    }
    return sha256_hex(body);
}

RainFitTable load_rain_fit_table(const std::filesystem::path& source) {
    const auto file = read_data_file(source);
    RainFitTable table;
    table.sha256 = check_integrity(file, source);
    table.version = comment_value(file, "version").value_or("unversioned");

    enum class Section { none, gaussian, linear } section = Section::none;
    std::array<bool, 4> have_linear{};

    for (const auto& row : file.rows) {
        const auto fields = split_csv(row.text);
        if (!fields.empty() && fields[0] == "family") {
            if (fields.size() == 5 && fields[1] == "j")
                section = Section::gaussian;
            else if (fields.size() == 3 && fields[1] == "m")
                section = Section::linear;
            else
                row_error(source, row, "unknown section header");
            continue;
        }
        if (section == Section::none) row_error(source, row, "data before any header");
        const auto family = parse_family(fields.at(0));
        if (!family) row_error(source, row, "unknown family '" + fields[0] + "'");
        auto& curve = table.curves[static_cast<int>(*family)];

        if (section == Section::gaussian) {
            if (fields.size() != 5) row_error(source, row, "expected 5 columns");
            const double j = parse_number(fields[1], source, row);
            if (j != static_cast<double>(curve.terms.size() + 1))
                row_error(source, row, "term index out of sequence");
            GaussianTerm term{parse_number(fields[2], source, row), parse_number(fields[3], source, row),
                              parse_number(fields[4], source, row)};
            if (term.c == 0.0) row_error(source, row, "c_j must be non-zero");
            curve.terms.push_back(term);
        } else {
            if (fields.size() != 3) row_error(source, row, "expected 3 columns");
            if (have_linear[static_cast<int>(*family)]) row_error(source, row, "duplicate linear term");
            have_linear[static_cast<int>(*family)] = true;
            curve.slope = parse_number(fields[1], source, row);
            curve.intercept = parse_number(fields[2], source, row);
        }
    }

    for (auto family : {RainFamily::kH, RainFamily::kV, RainFamily::alphaH, RainFamily::alphaV}) {
        const auto n = table.curve(family).terms.size();
        if (n != expected_term_count(family))
            throw DataError(source.string() + ": family " + std::string(to_string(family)) + " has " +
                            std::to_string(n) + " Gaussian terms, expected " +
                            std::to_string(expected_term_count(family)));
        if (!have_linear[static_cast<int>(family)])
            throw DataError(source.string() + ": family " + std::string(to_string(family)) +
                            " is missing its (m, c) row");
    }
    return table;
}

SpectroscopicLineTable load_line_table(const std::filesystem::path& source) {
    const auto file = read_data_file(source);
    SpectroscopicLineTable table;
    table.sha256 = check_integrity(file, source);
    table.version = comment_value(file, "version").value_or("unversioned");

    bool header_seen = false;
    for (const auto& row : file.rows) {
        const auto fields = split_csv(row.text);
        if (!header_seen) {
            if (fields.size() != 8 || fields[0] != "gas" || fields[1] != "f0_GHz")
                row_error(source, row, "expected header gas,f0_GHz,c1..c6");
            header_seen = true;
            continue;
        }
        if (fields.size() != 8) row_error(source, row, "expected 8 columns");
        std::vector<SpectralLine>* list = nullptr;
        if (fields[0] == "oxygen")
            list = &table.oxygen;
        else if (fields[0] == "water")
            list = &table.water;
        else
            row_error(source, row, "unknown gas '" + fields[0] + "'");

        SpectralLine line;
        line.center_ghz = parse_number(fields[1], source, row);
        for (int i = 0; i < 6; ++i) line.coeff[i] = parse_number(fields[2 + i], source, row);
        if (!(line.center_ghz > 0.0)) row_error(source, row, "line center must be positive");
        if (!list->empty() && !(line.center_ghz > list->back().center_ghz))
            row_error(source, row, "line centers not strictly ascending");
        list->push_back(line);
    }
    if (table.oxygen.empty() || table.water.empty())
        throw DataError(source.string() + ": both oxygen and water line lists must be non-empty");
    return table;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("UAVWX_DATA_DIR"); env && *env) return env;
    return UAVWX_DATA_DIR;
}

std::filesystem::path default_rain_table_path() { return default_data_dir() / "itu_p838_3_rain_coefficients.csv"; }
std::filesystem::path default_line_table_path() { return default_data_dir() / "itu_p676_12_lines.csv"; }
std::filesystem::path default_environment_path() { return default_data_dir() / "a2g_environments.json"; }

}  // namespace uavwx
