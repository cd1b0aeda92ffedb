// bench.cpp — serial vs OpenMP kernel benchmark.
//
// Times the fidelity and conservation kernels on the ultrastrong effective
// model at the dimension cap and checks that the parallel kernel reproduces
// the serial reference bitwise.
#include "fluxbus/dynamics.hpp"
#include "fluxbus/hammodels.hpp"
#include "fluxbus/kernels.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

using namespace fluxbus;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int main() {
    SystemParams p{9.0, 1.0, 1.0, 1.0, 1.0};
    Cutoffs cut{40, 40};
    Operator h = build_eff_ultra(p, cut);
    StateVector psi0 = resolve_state(StateSpec{}, HamiltonianKind::eff_ultra, cut, 0, true);
    StateVector target = resolve_state(StateSpec{}, HamiltonianKind::eff_ultra, cut, 0, false);

    std::printf("dimension: %d, openmp: %s\n", h.space.total_dim(),
                kernels_have_openmp() ? "yes" : "no");

    auto t0 = std::chrono::steady_clock::now();
    Eigensystem es = eigensystem(h);
    std::printf("eigendecomposition: %.1f ms\n", ms_since(t0));

    const int n_times = 200001;
    std::vector<double> times(n_times);
    double gamma = transfer_rate(p);
    for (int i = 0; i < n_times; ++i)
        times[i] = 4.0 * static_cast<double>(i) / static_cast<double>(n_times - 1) / gamma;

    t0 = std::chrono::steady_clock::now();
    std::vector<double> serial = fidelity_series_serial(es, psi0, target, times);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<double> parallel = fidelity_series_parallel(es, psi0, target, times);
    double t_parallel = ms_since(t0);

    double max_delta = 0.0;
    for (int i = 0; i < n_times; ++i)
        max_delta = std::max(max_delta, std::abs(serial[i] - parallel[i]));

    std::printf("fidelity series (%d samples): serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
                n_times, t_serial, t_parallel, t_serial / t_parallel);
    std::printf("max |serial - parallel| = %.3g  (must be exactly 0)\n", max_delta);

    std::vector<double> conserve_times(times.begin(), times.begin() + 2001);
    t0 = std::chrono::steady_clock::now();
    ConservationSeries cs = conservation_series(h, es, psi0, conserve_times);
    std::printf("conservation series (2001 samples): %.1f ms\n", ms_since(t0));

    double norm_dev = 0.0, drift = 0.0;
    for (double n : cs.norms) norm_dev = std::max(norm_dev, std::abs(n - 1.0));
    for (double e : cs.energies) drift = std::max(drift, std::abs(e - cs.energies[0]));
    std::printf("norm deviation %.3g, energy drift %.3g\n", norm_dev, drift);

    return max_delta == 0.0 ? 0 : 1;
}
