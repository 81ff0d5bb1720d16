#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "uavwx/quantities.hpp"

namespace uavwx {

/// Environment parameters of the probabilistic air-to-ground model.
struct A2GEnvironment {
    std::string label;
    double a = 0.0;
    double b = 0.0;
    double eta_los_db = 0.0;
    double eta_nlos_db = 0.0;
    std::string provenance;

    /// Throws DomainError unless a > 0, b > 0 and eta_nlos >= eta_los >= 0.
    void validate() const;
};

struct LosSplit {
    double los = 0.0;
    double nlos = 0.0;
};

struct LosNlosPathLoss {
    double los_db = 0.0;
    double nlos_db = 0.0;
};

/// Elevation angle in degrees seen from the user; r = 0 is 90 degrees.
double elevation_deg(Length altitude, Length ground_radius);

LosSplit los_probability(Length altitude, Length ground_radius, const A2GEnvironment& env);

LosNlosPathLoss los_nlos_path_loss(Frequency f, Length d, const A2GEnvironment& env);

/// 20 log10(4 pi f d / c0).
double free_space_loss_db(Frequency f, Length d);

/// Probability-weighted LoS/NLoS loss plus the gaseous term (clear air).
Decibels aerial_path_loss(Length altitude, Length ground_radius, Frequency f, const A2GEnvironment& env,
                          AttenuationRate gas);

/// Clear-air model plus the weather term (beta + gamma) d / 1000.
Decibels aerial_path_loss_weather(Length altitude, Length ground_radius, Frequency f, const A2GEnvironment& env,
                                  AttenuationRate gas, AttenuationRate weather);

/// Same quantity written as A P_LoS + 20 log10(d) + B + (beta + gamma) d / 1000
/// with A = eta_LoS - eta_NLoS and B = 20 log10(4 pi f / c0) + eta_NLoS.
Decibels aerial_path_loss_weather_grouped(Length altitude, Length ground_radius, Frequency f,
                                          const A2GEnvironment& env, AttenuationRate gas, AttenuationRate weather);

std::vector<A2GEnvironment> load_environment_presets(const std::filesystem::path& source);

/// Looks up `label` in `presets`; throws DomainError listing the known labels.
const A2GEnvironment& find_environment(const std::vector<A2GEnvironment>& presets, std::string_view label);

}  // namespace uavwx
