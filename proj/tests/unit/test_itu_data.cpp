#include <regex>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "uavwx/itu_data.hpp"

using namespace uavwx;
using test_support::read_file;
using test_support::temp_file;

namespace {

std::string without_checksum(const std::string& text) {
    return std::regex_replace(text, std::regex("# sha256: [0-9a-f]+\n"), "");
}

std::string shipped_rain() { return without_checksum(read_file(default_rain_table_path())); }
std::string shipped_lines() { return without_checksum(read_file(default_line_table_path())); }

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

template <typename F>
std::string error_of(F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("shipped rain table has 4 + 4 + 5 + 5 Gaussian terms") {
    const auto t = load_rain_fit_table(default_rain_table_path());
    CHECK(t.curve(RainFamily::kH).terms.size() == 4);
    CHECK(t.curve(RainFamily::kV).terms.size() == 4);
    CHECK(t.curve(RainFamily::alphaH).terms.size() == 5);
    CHECK(t.curve(RainFamily::alphaV).terms.size() == 5);
    CHECK(t.version == "P.838-3");
    CHECK(t.curve(RainFamily::kH).slope == -0.18961);
    CHECK(t.curve(RainFamily::alphaV).intercept == 0.83433);
    for (auto fam : {RainFamily::kH, RainFamily::kV, RainFamily::alphaH, RainFamily::alphaV})
        for (const auto& term : t.curve(fam).terms) CHECK(term.c != 0.0);
}

TEST_CASE("rain table with three kH terms is rejected naming the family") {
    const auto text = replace_once(shipped_rain(), "kH,4,-0.94158,0.64552,0.16817\n", "");
    const auto msg = error_of([&] { load_rain_fit_table(temp_file("rain_3kh.csv", text)); });
    CHECK(msg.find("kH") != std::string::npos);
    CHECK_THROWS_AS(load_rain_fit_table(temp_file("rain_3kh.csv", text)), DataError);
}

TEST_CASE("rain table with c_j = 0 is rejected naming the row") {
    const auto text = replace_once(shipped_rain(), "kV,3,-0.39902,0.73042,0.11899", "kV,3,-0.39902,0.73042,0");
    const auto msg = error_of([&] { load_rain_fit_table(temp_file("rain_c0.csv", text)); });
    CHECK(msg.find("kV,3") != std::string::npos);
    CHECK_THROWS_AS(load_rain_fit_table(temp_file("rain_c0.csv", text)), DataError);
}

TEST_CASE("rain table loader errors") {
    CHECK_THROWS_AS(load_rain_fit_table("/nonexistent/rain.csv"), DataError);
    const auto bad_number = replace_once(shipped_rain(), "kH,2,-0.35351", "kH,2,-0.35x51");
    const auto msg = error_of([&] { load_rain_fit_table(temp_file("rain_bad.csv", bad_number)); });
    CHECK(msg.find("rain_bad.csv:") != std::string::npos);
    CHECK(msg.find("kH,2,-0.35x51") != std::string::npos);
    const auto no_linear = replace_once(shipped_rain(), "alphaV,-0.053739,0.83433\n", "");
    CHECK_THROWS_AS(load_rain_fit_table(temp_file("rain_nolin.csv", no_linear)), DataError);
    CHECK_THROWS_AS(load_rain_fit_table(temp_file("rain_empty.csv", "")), DataError);
}

TEST_CASE("shipped line table has the 60 GHz oxygen complex") {
    const auto t = load_line_table(default_line_table_path());
    CHECK(t.version == "P.676-12");
    CHECK(t.oxygen.size() == 44);
    CHECK(t.water.size() == 35);
    int in_band = 0;
    for (const auto& line : t.oxygen)
        if (line.center_ghz > 50.0 && line.center_ghz < 70.0) ++in_band;
    CHECK(in_band > 10);
    for (std::size_t i = 1; i < t.oxygen.size(); ++i) CHECK(t.oxygen[i].center_ghz > t.oxygen[i - 1].center_ghz);
    for (std::size_t i = 1; i < t.water.size(); ++i) CHECK(t.water[i].center_ghz > t.water[i - 1].center_ghz);
}

TEST_CASE("line table loader errors") {
    CHECK_THROWS_AS(load_line_table(temp_file("lines_empty.csv", "")), DataError);
    CHECK_THROWS_AS(load_line_table(temp_file("lines_header_only.csv", "gas,f0_GHz,c1,c2,c3,c4,c5,c6\n")), DataError);
    const auto unsorted = replace_once(shipped_lines(), "oxygen,50.987745", "oxygen,50.000001");
    const auto msg = error_of([&] { load_line_table(temp_file("lines_unsorted.csv", unsorted)); });
    CHECK(msg.find("50.000001") != std::string::npos);
    CHECK_THROWS_AS(load_line_table(temp_file("lines_unsorted.csv", unsorted)), DataError);
    const auto bad_gas = replace_once(shipped_lines(), "oxygen,50.474214", "ozone,50.474214");
    CHECK_THROWS_AS(load_line_table(temp_file("lines_gas.csv", bad_gas)), DataError);
}

TEST_CASE("checksum mismatch is an integrity error") {
    const auto text = replace_once(read_file(default_line_table_path()), "oxygen,50.474214,0.975000",
                                   "oxygen,50.474214,0.975001");
    CHECK_THROWS_AS(load_line_table(temp_file("lines_tampered.csv", text)), IntegrityError);
    const auto rain = replace_once(read_file(default_rain_table_path()), "-5.33980", "-5.33981");
    CHECK_THROWS_AS(load_rain_fit_table(temp_file("rain_tampered.csv", rain)), IntegrityError);
}

TEST_CASE("checksum ignores comment lines and matches the recorded value") {
    const auto text = read_file(default_line_table_path());
    const auto t = load_line_table(default_line_table_path());
    CHECK(data_body_sha256(text) == t.sha256);
    CHECK(data_body_sha256("# a comment\n" + text) == t.sha256);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("loading is deterministic") {
    const auto a = load_line_table(default_line_table_path());
    const auto b = load_line_table(default_line_table_path());
    REQUIRE(a.oxygen.size() == b.oxygen.size());
    for (std::size_t i = 0; i < a.oxygen.size(); ++i) {
        CHECK(a.oxygen[i].center_ghz == b.oxygen[i].center_ghz);
        for (int k = 0; k < 6; ++k) CHECK(a.oxygen[i].coeff[k] == b.oxygen[i].coeff[k]);
    }
    const auto r1 = load_rain_fit_table(default_rain_table_path());
    const auto r2 = load_rain_fit_table(default_rain_table_path());
    CHECK(r1.sha256 == r2.sha256);
    CHECK(r1.curve(RainFamily::alphaH).terms[4].a == r2.curve(RainFamily::alphaH).terms[4].a);
}
