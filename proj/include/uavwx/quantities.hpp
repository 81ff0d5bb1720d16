#pragma once

// Unit-carrying scalars. Values are stored in SI base units (Hz, m, K, Pa);
// the empirical formulas convert at their own boundary.

#include <cmath>
#include <compare>
#include <string>

#include "uavwx/errors.hpp"

namespace uavwx {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;      // J/K

class Frequency {
public:
    static Frequency hz(double v) { return Frequency(v); }
    static Frequency mhz(double v) { return Frequency(v * 1e6); }
    static Frequency ghz(double v) { return Frequency(v * 1e9); }

    double hz() const { return hz_; }
    double mhz() const { return hz_ / 1e6; }
    double ghz() const { return hz_ / 1e9; }

    auto operator<=>(const Frequency&) const = default;

private:
    explicit Frequency(double v) : hz_(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("frequency must be positive and finite, got " + std::to_string(v) + " Hz");
    }
    double hz_;
};

class Length {
public:
    Length() = default;
    static Length meters(double v) { return Length(v); }
    static Length kilometers(double v) { return Length(v * 1e3); }
    static Length centimeters(double v) { return Length(v * 1e-2); }
    static Length millimeters(double v) { return Length(v * 1e-3); }

    double meters() const { return m_; }
    double kilometers() const { return m_ / 1e3; }
    double centimeters() const { return m_ * 1e2; }
    double millimeters() const { return m_ * 1e3; }

    auto operator<=>(const Length&) const = default;

private:
    explicit Length(double v) : m_(v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("length must be non-negative and finite, got " + std::to_string(v) + " m");
    }
    double m_ = 0.0;
};

class Temperature {
public:
    static Temperature kelvin(double v) { return Temperature(v); }
    double kelvin() const { return k_; }
    auto operator<=>(const Temperature&) const = default;

private:
    explicit Temperature(double v) : k_(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("absolute temperature must be positive, got " + std::to_string(v) + " K");
    }
    double k_;
};

class Pressure {
public:
    static Pressure pascals(double v) { return Pressure(v); }
    static Pressure hectopascals(double v) { return Pressure(v * 100.0); }
    double pascals() const { return pa_; }
    double hectopascals() const { return pa_ / 100.0; }
    auto operator<=>(const Pressure&) const = default;

private:
    explicit Pressure(double v) : pa_(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("pressure must be positive, got " + std::to_string(v) + " Pa");
    }
    double pa_;
};

/// Specific attenuation in dB/km.
class AttenuationRate {
public:
    AttenuationRate() = default;
    static AttenuationRate db_per_km(double v) { return AttenuationRate(v); }
    double db_per_km() const { return v_; }

    friend AttenuationRate operator+(AttenuationRate a, AttenuationRate b) {
        return AttenuationRate(a.v_ + b.v_);
    }
    auto operator<=>(const AttenuationRate&) const = default;

private:
    explicit AttenuationRate(double v) : v_(v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("specific attenuation must be non-negative and finite, got " + std::to_string(v));
    }
    double v_ = 0.0;
};

/// A relative level (gain, loss, ratio) in dB.
struct Decibels {
    double value = 0.0;

    friend constexpr Decibels operator+(Decibels a, Decibels b) { return {a.value + b.value}; }
    friend constexpr Decibels operator-(Decibels a, Decibels b) { return {a.value - b.value}; }
    friend constexpr Decibels operator-(Decibels a) { return {-a.value}; }
    auto operator<=>(const Decibels&) const = default;
};

/// An absolute power level in dBm. Adding two dBm levels is not defined;
/// dBm +/- dB gives dBm and dBm - dBm gives dB.
struct DecibelMilliwatts {
    double value = 0.0;

    friend constexpr DecibelMilliwatts operator+(DecibelMilliwatts p, Decibels g) { return {p.value + g.value}; }
    friend constexpr DecibelMilliwatts operator-(DecibelMilliwatts p, Decibels l) { return {p.value - l.value}; }
    friend constexpr Decibels operator-(DecibelMilliwatts a, DecibelMilliwatts b) { return {a.value - b.value}; }
    auto operator<=>(const DecibelMilliwatts&) const = default;
};

/// Free-space wavelength c0 / f.
inline Length wavelength(Frequency f) { return Length::meters(kSpeedOfLight / f.hz()); }

/// Straight-line UAV-to-user distance sqrt(h^2 + r^2).
inline Length slant_distance(Length altitude, Length ground_radius) {
    if (altitude.meters() == 0.0 && ground_radius.meters() == 0.0)
        throw GeometryError("slant distance undefined for h = r = 0 (elevation angle undefined)");
    return Length::meters(std::hypot(altitude.meters(), ground_radius.meters()));
}

}  // namespace uavwx
