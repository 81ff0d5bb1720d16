#include "doctest.h"
#include "support.hpp"
#include "uavwx/link_budget.hpp"

using namespace uavwx;
using doctest::Approx;

namespace {
RadioSystem radio(double ghz, double nf, double bandwidth = kDefaultBandwidthHz) {
    RadioSystem s = default_radio_system(Frequency::ghz(ghz));
    s.noise_figure = {nf};
    s.bandwidth_hz = bandwidth;
    return s;
}
}  // namespace

TEST_CASE("effective wavelength") {
    const auto f = Frequency::ghz(60);
    CHECK(effective_wavelength(f, 1.0).meters() == wavelength(f).meters());
    CHECK(effective_wavelength(f, 4.0).meters() == Approx(wavelength(f).meters() / 2.0).epsilon(1e-15));
    CHECK(effective_wavelength(f, 2.25).millimeters() == Approx(3.331).epsilon(1e-3 / 3.331));
    CHECK_THROWS_AS(effective_wavelength(f, 0.9), DomainError);
}

TEST_CASE("array designs for a 10 cm aperture") {
    const auto w = Length::centimeters(10);
    const auto a60 = array_design(Frequency::ghz(60), w, 1.0);
    CHECK(a60.elements_per_side == 40);
    CHECK(a60.element_count == 1600);
    CHECK(a60.gain.value == Approx(36.04).epsilon(0.005 / 36.04));
    const auto a300 = array_design(Frequency::ghz(300), w, 1.0);
    CHECK(a300.elements_per_side == 200);
    CHECK(a300.element_count == 40000);
    CHECK(a300.gain.value == Approx(50.02).epsilon(0.005 / 50.02));
    const auto a2 = array_design(Frequency::ghz(2), w, 1.0);
    CHECK(a2.elements_per_side == 1);
    CHECK(a2.element_count == 1);
    CHECK(a2.gain.value == 4.0);
}

TEST_CASE("array design properties") {
    const auto w = Length::centimeters(10);
    int previous = 0;
    for (double g = 1.0; g <= 1000.0; g += 0.5) {
        const auto a = array_design(Frequency::ghz(g), w, 1.0);
        CHECK(a.elements_per_side >= previous);
        CHECK(a.element_count == a.elements_per_side * a.elements_per_side);
        CHECK(a.gain.value == Approx(4.0 + 10.0 * std::log10(a.element_count)).epsilon(1e-12));
        previous = a.elements_per_side;
    }
    const auto small = array_design(Frequency::ghz(30), Length::centimeters(5), 1.0);
    const auto big = array_design(Frequency::ghz(30), Length::centimeters(10), 1.0);
    REQUIRE(big.element_count == 4 * small.element_count);
    CHECK(big.gain.value - small.gain.value == Approx(6.0206).epsilon(1e-5));
}

TEST_CASE("received power bookkeeping") {
    RadioSystem s = radio(60, 2);
    CHECK(received_power(s, {36}, {36}, {120}).value == Approx(-5.0));
    s.rx_front_end_loss = {0};
    s.tx_front_end_loss = {0};
    CHECK(received_power(s, {0}, {0}, {0}).value == s.tx_power.value);
    const double a = received_power(s, {10}, {10}, {100}).value;
    const double b = received_power(s, {10}, {10}, {107.5}).value;
    CHECK(a - b == Approx(7.5));
    CHECK_THROWS_AS(received_power(s, {0}, {0}, {-1}), DomainError);
}

TEST_CASE("noise power") {
    CHECK(noise_power(radio(2, 1)).value == Approx(-92.86).epsilon(0.01 / 92.86));
    CHECK(noise_power(radio(2, 0, 1.0)).value == Approx(-173.86).epsilon(0.01 / 173.86));
    CHECK(noise_power(radio(2, 1, 2e8)).value - noise_power(radio(2, 1)).value == Approx(3.0103).epsilon(1e-5));
    RadioSystem s = radio(2, 1);
    s.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK_THROWS_AS(noise_power(s), DomainError);
}

TEST_CASE("snr") {
    CHECK(snr({-5.0}, {-92.86}).value == Approx(87.86));
    CHECK(snr({-70.0}, {-70.0}).value == 0.0);
    const RadioSystem s = radio(60, 2);
    const auto n = noise_power(s);
    const double base = snr(received_power(s, {20}, {20}, {130}), n).value;
    CHECK(snr(received_power(s, {23}, {20}, {130}), n).value - base == Approx(3.0));
}

TEST_CASE("radio system validation") {
    RadioSystem s = default_radio_system(Frequency::ghz(60));
    CHECK_NOTHROW(s.validate());
    s.tx_power = {46};
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = default_radio_system(Frequency::ghz(60));
    s.rx_front_end_loss = {-1};
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = default_radio_system(Frequency::ghz(60));
    s.effective_permittivity = 0.5;
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK(default_noise_figure(Frequency::ghz(2)).value == 1.0);
    CHECK(default_noise_figure(Frequency::ghz(60)).value == 2.0);
    CHECK(default_noise_figure(Frequency::ghz(300)).value == 6.5);
}
