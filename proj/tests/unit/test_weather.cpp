#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "uavwx/weather.hpp"

using namespace uavwx;
using doctest::Approx;
using test_support::rain_table;

namespace {

struct GridRow {
    double f, kh, ah, kv, av;
};

std::vector<GridRow> tabulated_grid() {
    std::ifstream in(std::string(UAVWX_TEST_FIXTURE_DIR) + "/p838_3_tabulated_grid.csv");
    REQUIRE(in);
    std::vector<GridRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'f') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream s(line);
        GridRow r{};
        s >> r.f >> r.kh >> r.ah >> r.kv >> r.av;
        rows.push_back(r);
    }
    return rows;
}

// Step-by-step double-Debye evaluation kept independent of the library code.
double fog_kl_reference(double f, double t) {
    const double theta = 300.0 / t;
    const double e0 = 77.66 + 103.3 * (theta - 1.0);
    const double e1 = 0.0671 * e0;
    const double e2 = 3.52;
    const double fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) * (theta - 1.0);
    const double fs = 39.8 * fp;
    const double eim = f * (e0 - e1) / (fp * (1.0 + (f / fp) * (f / fp))) + f * (e1 - e2) / (fs * (1.0 + (f / fs) * (f / fs)));
    const double ere = (e0 - e1) / (1.0 + (f / fp) * (f / fp)) + (e1 - e2) / (1.0 + (f / fs) * (f / fs)) + e2;
    const double eta = (2.0 + ere) / eim;
    return 0.819 * f / (eim * (1.0 + eta * eta));
}

}  // namespace

TEST_CASE("rain fit matches the published coefficient grid within 1e-3 relative") {
    const auto grid = tabulated_grid();
    REQUIRE(grid.size() >= 10);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i].f > grid[i - 1].f);
    for (const auto& row : grid) {
        const auto f = Frequency::ghz(row.f);
        CAPTURE(row.f);
        CHECK(rain_power_law(f, rain_table(), RainFamily::kH) == Approx(row.kh).epsilon(1e-3));
        CHECK(rain_power_law(f, rain_table(), RainFamily::kV) == Approx(row.kv).epsilon(1e-3));
        CHECK(rain_power_law(f, rain_table(), RainFamily::alphaH) == Approx(row.ah).epsilon(1e-3));
        CHECK(rain_power_law(f, rain_table(), RainFamily::alphaV) == Approx(row.av).epsilon(1e-3));
    }
}

TEST_CASE("rain fit outside its window is a range error") {
    CHECK_THROWS_AS(rain_power_law(Frequency::ghz(0.5), rain_table(), RainFamily::kH), RangeError);
    CHECK_THROWS_AS(rain_power_law(Frequency::ghz(1001.0), rain_table(), RainFamily::alphaV), RangeError);
    CHECK_NOTHROW(rain_power_law(Frequency::ghz(0.5), rain_table(), RainFamily::kH, FrequencyWindow{0.1, 1000.0}));
}

TEST_CASE("alpha stays within its sanity band") {
    for (double g : {10.0, 100.0, 500.0}) {
        const double a = rain_power_law(Frequency::ghz(g), rain_table(), RainFamily::alphaH);
        CHECK(std::isfinite(a));
        CHECK(a > 0.3);
        CHECK(a < 2.0);
    }
    for (double g = 1.0; g <= 1000.0; g *= 1.1) {
        const auto law = rain_power_law(Frequency::ghz(g), rain_table(), PolarizationGeometry{});
        CHECK(law.k > 0.0);
        CHECK(law.alpha > 0.3);
        CHECK(law.alpha < 2.0);
    }
}

TEST_CASE("polarization mixing limits") {
    const double kh = 0.2, kv = 0.15, ah = 1.1, av = 0.9;
    auto h = mix_polarization(kh, kv, ah, av, PolarizationGeometry::horizontal());
    CHECK(h.k == Approx(kh));
    CHECK(h.alpha == Approx(ah));
    auto v = mix_polarization(kh, kv, ah, av, PolarizationGeometry::vertical());
    CHECK(v.k == Approx(kv));
    CHECK(v.alpha == Approx(av));
    auto c = mix_polarization(kh, kv, ah, av, PolarizationGeometry::circular());
    CHECK(c.k == Approx((kh + kv) / 2));
    CHECK(c.alpha == Approx((kh * ah + kv * av) / (kh + kv)));
}

TEST_CASE("polarization mixing is symmetric under H/V and tilt swap") {
    test_support::Rng rng;
    for (int i = 0; i < test_support::kPropertyCases; ++i) {
        const double kh = rng.log_uniform(1e-5, 3), kv = rng.log_uniform(1e-5, 3);
        const double ah = rng.uniform(0.4, 1.8), av = rng.uniform(0.4, 1.8);
        const PolarizationGeometry g{rng.uniform(0, 90), rng.uniform(0, 90)};
        const auto a = mix_polarization(kh, kv, ah, av, g);
        const auto b = mix_polarization(kv, kh, av, ah, PolarizationGeometry{g.elevation_deg, 90.0 - g.tilt_deg});
        CHECK(a.k == Approx(b.k).epsilon(1e-12));
        CHECK(a.alpha == Approx(b.alpha).epsilon(1e-12));
    }
}

TEST_CASE("rain specific attenuation") {
    CHECK(rain_specific_attenuation(Frequency::ghz(28), 0.0, {}, rain_table()).db_per_km() == 0.0);
    CHECK(rain_specific_attenuation(RainPowerLaw{1.0, 1.0}, 12.5).db_per_km() == Approx(12.5));
    CHECK_THROWS_AS(rain_specific_attenuation(Frequency::ghz(28), -1.0, {}, rain_table()), DomainError);

    const auto f = Frequency::ghz(28);
    const auto law = mix_polarization(rain_power_law(f, rain_table(), RainFamily::kH),
                                      rain_power_law(f, rain_table(), RainFamily::kV),
                                      rain_power_law(f, rain_table(), RainFamily::alphaH),
                                      rain_power_law(f, rain_table(), RainFamily::alphaV), PolarizationGeometry{});
    const double expected = law.k * std::pow(12.5, law.alpha);
    CHECK(rain_specific_attenuation(f, 12.5, {}, rain_table()).db_per_km() == Approx(expected).epsilon(1e-12));
    CHECK(expected == Approx(2.2019).epsilon(1e-4));
}

TEST_CASE("rain attenuation reproduces the ITU validation worksheet values") {
    struct Case {
        double rate, f, elevation, gamma;
    };
    const Case cases[] = {
        {30.875024, 14.25, 30.87067768, 1.879742}, {56.370009, 14.25, 40.97052773, 3.630988},
        {55.231625, 14.25, 47.91280491, 3.503189}, {30.875024, 29.0, 30.87067768, 5.814832},
        {56.370009, 29.0, 40.97052773, 10.157375}, {55.231625, 29.0, 47.91280491, 9.846762},
    };
    for (const auto& c : cases) {
        CAPTURE(c.f);
        CAPTURE(c.rate);
        const auto g = rain_specific_attenuation(Frequency::ghz(c.f), c.rate, PolarizationGeometry{c.elevation, 0.0},
                                                 rain_table());
        CHECK(g.db_per_km() == Approx(c.gamma).epsilon(1e-5));
    }
}

TEST_CASE("fog permittivity constants") {
    const auto p = fog_permittivity(Frequency::ghz(28), Temperature::kelvin(293.15));
    CHECK(p.eps0 == Approx(80.0738).epsilon(1e-3 / 80.0738));
    CHECK(p.eps1 == Approx(5.3730).epsilon(1e-3 / 5.3730));
    CHECK(p.fp_ghz == Approx(16.961).epsilon(1e-3 / 16.961));
    CHECK(p.fs_ghz == Approx(39.8 * p.fp_ghz));
    CHECK(p.eps_imag > 0.0);

    const auto q = fog_permittivity(Frequency::ghz(28), Temperature::kelvin(300.0));
    CHECK(q.theta == 1.0);
    CHECK(q.eps0 == Approx(77.66));
    CHECK(q.fp_ghz == Approx(20.20));

    const auto low = fog_permittivity(Frequency::hz(1.0), Temperature::kelvin(293.15));
    CHECK(low.eps_real == Approx(low.eps0).epsilon(1e-9));

    CHECK_THROWS_AS(fog_permittivity(Frequency::ghz(28), Temperature::kelvin(240.0)), RangeError);
    CHECK_THROWS_AS(fog_permittivity(Frequency::ghz(28), Temperature::kelvin(320.0)), RangeError);
}

TEST_CASE("fog attenuation") {
    const auto t = Temperature::kelvin(293.15);
    CHECK(fog_specific_attenuation(Frequency::ghz(100), 0.0).db_per_km() == 0.0);
    CHECK(fog_specific_attenuation(Frequency::ghz(100), 0.05, t).db_per_km() ==
          Approx(0.05 * fog_kl_reference(100.0, 293.15)).epsilon(1e-12));
    CHECK(fog_attenuation_coefficient(Frequency::ghz(28), t) == Approx(0.4107).epsilon(1e-3));
    const double g1 = fog_specific_attenuation(Frequency::ghz(60), 0.05, t).db_per_km();
    const double g10 = fog_specific_attenuation(Frequency::ghz(60), 0.5, t).db_per_km();
    CHECK(g10 == Approx(10.0 * g1).epsilon(1e-14));
    CHECK_THROWS_AS(fog_specific_attenuation(Frequency::ghz(60), -0.01), DomainError);
}

TEST_CASE("dry snow attenuation") {
    CHECK(snow_specific_attenuation(Frequency::ghz(60), 0.0).db_per_km() == 0.0);
    CHECK(snow_specific_attenuation(Frequency::ghz(60), 5.0).db_per_km() == Approx(0.756).epsilon(0.005));

    const auto f = Frequency::ghz(40);
    const double lambda_cm = wavelength(f).centimeters();
    const double first = 0.00349 * std::pow(3.0, 1.6) / std::pow(lambda_cm, 4);
    const double second = 0.00224 * 3.0 / lambda_cm;
    CHECK(snow_specific_attenuation(f, 3.0).db_per_km() == Approx(first + second).epsilon(1e-12));
    CHECK(snow_specific_attenuation(f, 6.0).db_per_km() ==
          Approx(first * std::pow(2.0, 1.6) + 2.0 * second).epsilon(1e-12));
    CHECK(std::pow(2.0, 1.6) == Approx(3.0314).epsilon(1e-4));

    CHECK_THROWS_AS(snow_specific_attenuation(f, -1.0), DomainError);
    CHECK_THROWS_AS(snow_specific_attenuation(Frequency::ghz(350), 0.5), RangeError);
    CHECK_THROWS_AS(snow_specific_attenuation(Frequency::ghz(0.5), 0.5), RangeError);
    SnowModelOptions opts;
    opts.allow_extrapolation = true;
    CHECK(snow_specific_attenuation(Frequency::ghz(350), 0.5, opts).db_per_km() == Approx(21.401).epsilon(1e-4));
    try {
        snow_specific_attenuation(Frequency::ghz(900), 5.0);
        FAIL("expected a range error");
    } catch (const RangeError& e) {
        CHECK(std::string(e.what()).find("1-200 GHz") != std::string::npos);
    }
}

TEST_CASE("weather attenuation at the reference intensities") {
    struct Row {
        double f, rain, fog, snow;
    };
    const Row rows[] = {{28, 2.2019, 0.020532, 0.045337}, {39, 3.6458, 0.039014, 0.14584},
                        {60, 5.7946, 0.087317, 0.75777},  {100, 7.5988, 0.20852, 5.7114},
                        {188, 8.1957, 0.48881, 70.951}};
    for (const auto& r : rows) {
        CAPTURE(r.f);
        const auto f = Frequency::ghz(r.f);
        CHECK(weather_specific_attenuation(f, Rain{12.5}, rain_table()).db_per_km() == Approx(r.rain).epsilon(1e-4));
        CHECK(weather_specific_attenuation(f, Fog{0.05}, rain_table()).db_per_km() == Approx(r.fog).epsilon(1e-4));
        CHECK(weather_specific_attenuation(f, DrySnow{5.0}, rain_table()).db_per_km() == Approx(r.snow).epsilon(1e-4));
    }
    CHECK(weather_specific_attenuation(Frequency::ghz(900), ClearSky{}, rain_table()).db_per_km() == 0.0);
    CHECK(describe(Rain{12.5}) == "rain:12.5");
    CHECK(describe(ClearSky{}) == "clear");
}

TEST_CASE("zero intensity gives zero attenuation for every weather model") {
    test_support::Rng rng;
    for (int i = 0; i < test_support::kPropertyCases; ++i) {
        const auto f = Frequency::ghz(rng.log_uniform(1.0, 200.0));
        CHECK(weather_specific_attenuation(f, Rain{0.0}, rain_table()).db_per_km() == 0.0);
        CHECK(weather_specific_attenuation(f, Fog{0.0}, rain_table()).db_per_km() == 0.0);
        CHECK(weather_specific_attenuation(f, DrySnow{0.0}, rain_table()).db_per_km() == 0.0);
    }
}

TEST_CASE("attenuation is non-decreasing in intensity") {
    test_support::Rng rng;
    for (int i = 0; i < test_support::kPropertyCases; ++i) {
        const auto f = Frequency::ghz(rng.log_uniform(1.0, 200.0));
        const double x = rng.uniform(0.0, 100.0), y = x + rng.uniform(0.0, 50.0);
        CAPTURE(f.ghz());
        CHECK(weather_specific_attenuation(f, Rain{x}, rain_table()) <=
              weather_specific_attenuation(f, Rain{y}, rain_table()));
        CHECK(weather_specific_attenuation(f, Fog{x / 20}, rain_table()) <=
              weather_specific_attenuation(f, Fog{y / 20}, rain_table()));
        CHECK(weather_specific_attenuation(f, DrySnow{x / 5}, rain_table()) <=
              weather_specific_attenuation(f, DrySnow{y / 5}, rain_table()));
    }
}
