// Serial vs parallel timing of the two sweep kernels.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "uavwx/a2g.hpp"
#include "uavwx/coverage.hpp"
#include "uavwx/gas.hpp"
#include "uavwx/itu_data.hpp"
#include "uavwx/sweep.hpp"

using namespace uavwx;

namespace {

template <typename F>
double best_of(int repeats, F&& body) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const auto lines = load_line_table(default_line_table_path());
    const auto envs = load_environment_presets(default_environment_path());
    const AtmosphereState atmos;

    const auto freqs = frequency_grid(Frequency::ghz(1.0), Frequency::ghz(1000.0), Frequency::ghz(0.05));
    const double gas_serial = best_of(repeats, [&] { gas_attenuation_sweep(freqs, atmos, lines, Execution::serial); });
    const double gas_parallel =
        best_of(repeats, [&] { gas_attenuation_sweep(freqs, atmos, lines, Execution::parallel); });

    const auto f = Frequency::ghz(28.0);
    const CoverageModel model{f, find_environment(envs, "urban"), gas_specific_attenuation(f, atmos, lines).total,
                              AttenuationRate::db_per_km(2.2)};
    const auto hs = altitude_grid(Length::meters(0.0), Length::meters(5000.0), Length::meters(1.0));
    const double cov_serial =
        best_of(repeats, [&] { coverage_curve(hs, Decibels{130.0}, model, {}, Execution::serial); });
    const double cov_parallel =
        best_of(repeats, [&] { coverage_curve(hs, Decibels{130.0}, model, {}, Execution::parallel); });

    std::printf("openmp: %s\n", openmp_enabled() ? "on" : "off");
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial_ms", "omp_ms", "speedup");
    std::printf("%-28s %10.2f %10.2f %8.2f\n", "gas sweep (19981 freqs)", gas_serial, gas_parallel,
                gas_serial / gas_parallel);
    std::printf("%-28s %10.2f %10.2f %8.2f\n", "coverage curve (5001 alts)", cov_serial, cov_parallel,
                cov_serial / cov_parallel);
    return 0;
}
