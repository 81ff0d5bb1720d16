#include "uavwx/coverage.hpp"

#include <cmath>
#include <exception>
#include <mutex>

namespace uavwx {

namespace {

double loss_at(Length h, double r, const CoverageModel& m) {
    return aerial_path_loss_weather(h, Length::meters(r), m.frequency, m.environment, m.gas, m.weather).value;
}

CoverageOutcome failed(Length h, CoverageStatus status) { return {status, h, std::nullopt}; }

}  // namespace

std::string_view to_string(CoverageStatus status) {
    switch (status) {
        case CoverageStatus::ok: return "ok";
        case CoverageStatus::unreachable: return "unreachable";
        case CoverageStatus::unbounded: return "unbounded";
        case CoverageStatus::numerical_failure: return "numerical-failure";
    }
    return "?";
}

Decibels max_path_loss(const RadioSystem& system, Decibels tx_gain, Decibels rx_gain, Decibels snr_min) {
    const auto noise = noise_power(system);
    const auto headroom = system.tx_power - system.rx_front_end_loss - system.tx_front_end_loss + tx_gain + rx_gain;
    return (headroom - noise) - snr_min;
}

CoverageOutcome coverage_radius(Length altitude, Decibels pl_max, const CoverageModel& model,
                                const SolverOptions& options) {
    if (!std::isfinite(pl_max.value)) throw DomainError("maximum path loss must be finite");
    const double target = pl_max.value;
    const double cap = options.radius_cap.meters();

    // Invariant: loss(lo) <= target < loss(hi). With h = 0 the loss tends to
    // -inf as r -> 0+, so lo = 0 is a valid lower end without evaluation.
    double lo = 0.0;
    if (altitude.meters() > 0.0) {
        const double overhead = loss_at(altitude, 0.0, model);
        if (!std::isfinite(overhead)) return failed(altitude, CoverageStatus::numerical_failure);
        if (overhead > target) return failed(altitude, CoverageStatus::unreachable);
    }

    double hi = 1.0;
    while (true) {
        const double l = loss_at(altitude, std::min(hi, cap), model);
        if (!std::isfinite(l)) return failed(altitude, CoverageStatus::numerical_failure);
        if (l > target) {
            hi = std::min(hi, cap);
            break;
        }
        if (hi >= cap) return failed(altitude, CoverageStatus::unbounded);
        lo = hi;
        hi *= 2.0;
    }

    for (int i = 0; i < options.max_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double l = loss_at(altitude, mid, model);
        if (!std::isfinite(l)) return failed(altitude, CoverageStatus::numerical_failure);
        (l <= target ? lo : hi) = mid;
    }

    // For h = 0 the lower end may still be the singular r = 0.
    const double r = (lo > 0.0 || altitude.meters() > 0.0) ? lo : hi;
    const double loss = loss_at(altitude, r, model);
    if (!(std::abs(loss - target) <= options.residual_tolerance_db))
        return failed(altitude, CoverageStatus::numerical_failure);
    return {CoverageStatus::ok, altitude, CoveragePoint{altitude, Length::meters(r), Decibels{loss}}};
}

CoverageCurve coverage_curve(std::span<const Length> altitudes, Decibels pl_max, const CoverageModel& model,
                             const SolverOptions& options, Execution execution) {
    if (altitudes.empty()) throw DomainError("altitude grid must be non-empty");
    for (std::size_t i = 1; i < altitudes.size(); ++i)
        if (!(altitudes[i] > altitudes[i - 1])) throw DomainError("altitude grid must be strictly increasing");
    model.environment.validate();

    CoverageCurve curve;
    curve.outcomes.resize(altitudes.size());
    const auto n = static_cast<std::ptrdiff_t>(altitudes.size());

    if (execution == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) curve.outcomes[i] = coverage_radius(altitudes[i], pl_max, model, options);
    } else {
        std::exception_ptr error;
        std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                curve.outcomes[i] = coverage_radius(altitudes[i], pl_max, model, options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    }

    for (std::size_t i = 0; i < curve.outcomes.size(); ++i) {
        const auto& o = curve.outcomes[i];
        if (!o.point) continue;
        if (!curve.argmax || o.point->radius > curve.outcomes[*curve.argmax].point->radius) curve.argmax = i;
    }
    return curve;
}

std::vector<Length> altitude_grid(Length lo, Length hi, Length step) {
    if (!(step.meters() > 0.0)) throw DomainError("altitude step must be positive");
    if (hi < lo) throw DomainError("altitude grid upper end below lower end");
    const auto count = static_cast<std::size_t>(std::floor((hi.meters() - lo.meters()) / step.meters() + 1e-9)) + 1;
    std::vector<Length> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.push_back(Length::meters(lo.meters() + static_cast<double>(i) * step.meters()));
    return grid;
}

}  // namespace uavwx
