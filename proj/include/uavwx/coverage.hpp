#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uavwx/a2g.hpp"
#include "uavwx/execution.hpp"
#include "uavwx/link_budget.hpp"
#include "uavwx/quantities.hpp"

namespace uavwx {

/// Largest path loss that still meets `snr_min` with the given antenna gains.
Decibels max_path_loss(const RadioSystem& system, Decibels tx_gain, Decibels rx_gain, Decibels snr_min);

struct CoveragePoint {
    Length altitude;
    Length radius;
    Decibels path_loss;
};

enum class CoverageStatus {
    ok,
    unreachable,        // loss directly below the UAV already exceeds the threshold
    unbounded,          // threshold not reached before the radius cap
    numerical_failure,  // model returned a non-finite loss
};

std::string_view to_string(CoverageStatus status);

struct CoverageOutcome {
    CoverageStatus status = CoverageStatus::ok;
    Length altitude;
    std::optional<CoveragePoint> point;  // set iff status == ok
};

struct CoverageModel {
    Frequency frequency = Frequency::ghz(28.0);
    A2GEnvironment environment;
    AttenuationRate gas;
    AttenuationRate weather;
};

struct SolverOptions {
    double residual_tolerance_db = 0.01;
    Length radius_cap = Length::kilometers(100.0);
    int max_iterations = 200;
};

/// Ground radius at which the weather-extended A2G loss equals `pl_max`,
/// found by bisection after doubling the bracket from 1 m.
CoverageOutcome coverage_radius(Length altitude, Decibels pl_max, const CoverageModel& model,
                                const SolverOptions& options = {});

struct CoverageCurve {
    std::vector<CoverageOutcome> outcomes;  // one per altitude, grid order
    std::optional<std::size_t> argmax;      // index into outcomes; empty if nothing reachable

    bool empty() const { return !argmax.has_value(); }
    const CoveragePoint& best() const { return *outcomes.at(*argmax).point; }
};

/// Solves every altitude independently, then scans for the largest radius
/// (ties resolved to the lowest altitude). `altitudes` must be non-empty
/// and strictly increasing.
CoverageCurve coverage_curve(std::span<const Length> altitudes, Decibels pl_max, const CoverageModel& model,
                             const SolverOptions& options = {}, Execution execution = Execution::parallel);

/// Evenly spaced inclusive grid lo, lo + step, ..., <= hi.
std::vector<Length> altitude_grid(Length lo, Length hi, Length step);

}  // namespace uavwx
