#include "uavwx/a2g.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace uavwx {

void A2GEnvironment::validate() const {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("environment '" + label + "': a and b must be positive");
    if (!(eta_los_db >= 0.0) || !(eta_nlos_db >= eta_los_db))
        throw DomainError("environment '" + label + "': requires eta_nlos >= eta_los >= 0");
}

double elevation_deg(Length altitude, Length ground_radius) {
    const double h = altitude.meters();
    const double r = ground_radius.meters();
    if (h == 0.0 && r == 0.0) throw GeometryError("elevation angle undefined for h = r = 0");
    if (r == 0.0) return 90.0;
    return 180.0 / std::numbers::pi * std::atan(h / r);
}

LosSplit los_probability(Length altitude, Length ground_radius, const A2GEnvironment& env) {
    const double theta = elevation_deg(altitude, ground_radius);
    LosSplit split;
    split.los = 1.0 / (1.0 + env.a * std::exp(-env.b * (theta - env.a)));
    split.nlos = 1.0 - split.los;
    return split;
}

double free_space_loss_db(Frequency f, Length d) {
    if (d.meters() == 0.0) throw DomainError("free-space loss undefined at zero distance");
    return 20.0 * std::log10(4.0 * std::numbers::pi * f.hz() * d.meters() / kSpeedOfLight);
}

LosNlosPathLoss los_nlos_path_loss(Frequency f, Length d, const A2GEnvironment& env) {
    const double fs = free_space_loss_db(f, d);
    return {fs + env.eta_los_db, fs + env.eta_nlos_db};
}

Decibels aerial_path_loss(Length altitude, Length ground_radius, Frequency f, const A2GEnvironment& env,
                          AttenuationRate gas) {
    const Length d = slant_distance(altitude, ground_radius);
    const auto p = los_probability(altitude, ground_radius, env);
    const auto pl = los_nlos_path_loss(f, d, env);
    return {pl.los_db * p.los + pl.nlos_db * p.nlos + gas.db_per_km() * d.meters() / 1000.0};
}

Decibels aerial_path_loss_weather(Length altitude, Length ground_radius, Frequency f, const A2GEnvironment& env,
                                  AttenuationRate gas, AttenuationRate weather) {
    const Length d = slant_distance(altitude, ground_radius);
    const auto p = los_probability(altitude, ground_radius, env);
    const auto pl = los_nlos_path_loss(f, d, env);
    return {(pl.los_db * p.los + pl.nlos_db * p.nlos) +
            (gas.db_per_km() + weather.db_per_km()) * d.meters() / 1000.0};
}

Decibels aerial_path_loss_weather_grouped(Length altitude, Length ground_radius, Frequency f,
                                          const A2GEnvironment& env, AttenuationRate gas, AttenuationRate weather) {
    const double h = altitude.meters();
    const double r = ground_radius.meters();
    const double theta_rad = elevation_deg(altitude, ground_radius) * std::numbers::pi / 180.0;
    // r / cos(theta) is the slant distance; at r = 0 the ratio degenerates to h.
    const double d = r > 0.0 ? r / std::cos(theta_rad) : h;
    const double A = env.eta_los_db - env.eta_nlos_db;
    const double B = 20.0 * std::log10(4.0 * std::numbers::pi * f.hz() / kSpeedOfLight) + env.eta_nlos_db;
    const double p_los = 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_rad * 180.0 / std::numbers::pi - env.a)));
    return {(A * p_los + 20.0 * std::log10(d) + B) + (gas.db_per_km() + weather.db_per_km()) * d / 1000.0};
}

std::vector<A2GEnvironment> load_environment_presets(const std::filesystem::path& source) {
    std::ifstream in(source);
    if (!in) throw DataError("cannot open environment preset file " + source.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(source.string() + ": " + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw DataError(source.string() + ": expected a non-empty JSON list");

    std::vector<A2GEnvironment> presets;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        A2GEnvironment env;
        try {
            env.label = item.at("label").get<std::string>();
            env.a = item.at("a").get<double>();
            env.b = item.at("b").get<double>();
            env.eta_los_db = item.at("eta_los_db").get<double>();
            env.eta_nlos_db = item.at("eta_nlos_db").get<double>();
            env.provenance = item.value("provenance", std::string{});
            env.validate();
        } catch (const nlohmann::json::exception& e) {
            throw DataError(source.string() + ": entry " + std::to_string(i) + ": " + e.what());
        } catch (const DomainError& e) {
            throw DataError(source.string() + ": entry " + std::to_string(i) + ": " + e.what());
        }
        presets.push_back(std::move(env));
    }
    return presets;
}

const A2GEnvironment& find_environment(const std::vector<A2GEnvironment>& presets, std::string_view label) {
    for (const auto& env : presets)
        if (env.label == label) return env;
    std::string known;
    for (const auto& env : presets) known += (known.empty() ? "" : ", ") + env.label;
    throw DomainError("unknown environment '" + std::string(label) + "' (known: " + known + ")");
}

}  // namespace uavwx
