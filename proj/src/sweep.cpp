#include "uavwx/sweep.hpp"

#include <cmath>
#include <exception>
#include <mutex>

namespace uavwx {

bool openmp_enabled() {
#ifdef UAVWX_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

std::vector<GasAttenuationBreakdown> gas_attenuation_sweep(std::span<const Frequency> frequencies,
                                                           const AtmosphereState& atmosphere,
                                                           const SpectroscopicLineTable& lines, Execution execution) {
    atmosphere.validate();
    std::vector<GasAttenuationBreakdown> out(frequencies.size());
    const auto n = static_cast<std::ptrdiff_t>(frequencies.size());

    if (execution == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = gas_specific_attenuation(frequencies[i], atmosphere, lines);
        return out;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = gas_specific_attenuation(frequencies[i], atmosphere, lines);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<Frequency> frequency_grid(Frequency lo, Frequency hi, Frequency step) {
    if (hi < lo) throw DomainError("frequency grid upper end below lower end");
    const auto count = static_cast<std::size_t>(std::floor((hi.hz() - lo.hz()) / step.hz() + 1e-9)) + 1;
    std::vector<Frequency> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.push_back(Frequency::hz(lo.hz() + static_cast<double>(i) * step.hz()));
    return grid;
}

}  // namespace uavwx
