// test_kernels.cpp — propagation kernels: parity, correctness, conservation.
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fluxbus/hammodels.hpp"
#include "fluxbus/kernels.hpp"
#include "fluxbus/qalgebra.hpp"

using namespace fluxbus;

namespace {

struct Fixture {
    Operator h;
    Eigensystem es;
    StateVector psi0;
    StateVector target;
    std::vector<double> times;

    Fixture() : h(make_h()), es(eigensystem(h)), psi0(basis_state(h.space, {0, 3, 0})),
                target(basis_state(h.space, {1, 2, 1})), times(make_times()) {}

    static Operator make_h() {
        SystemParams p;
        p.omega_q = 2.0;
        p.omega_r = 1.0;
        p.omega_s = 1.05;
        p.g_qr = 0.2;
        p.g_qs = 0.15;
        return build_rabi_full(p, Cutoffs{6, 6});
    }

    static std::vector<double> make_times() {
        std::vector<double> t(801);
        for (std::size_t k = 0; k < t.size(); ++k) t[k] = 50.0 * double(k) / double(t.size() - 1);
        return t;
    }
};

}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
    const Fixture f;
    const auto serial = fidelity_series_serial(f.es, f.psi0, f.target, f.times);
    const auto parallel = fidelity_series_parallel(f.es, f.psi0, f.target, f.times);
    REQUIRE(serial.size() == parallel.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < serial.size(); ++k)
        worst = std::max(worst, std::abs(serial[k] - parallel[k]));
    CHECK(worst == 0.0);
    // Sanity: the report function is callable either way.
    (void)kernels_have_openmp();
}

TEST_CASE("spectral fidelity matches direct propagator evaluation") {
    const Fixture f;
    std::vector<double> sparse(f.times.begin(), f.times.begin() + 40);
    const auto series = fidelity_series_serial(f.es, f.psi0, f.target, sparse);
    for (std::size_t k = 0; k < sparse.size(); ++k) {
        const Matrix u = expm_hermitian(f.h, -sparse[k]).matrix;
        const double direct = std::norm(f.target.amplitudes.dot(u * f.psi0.amplitudes));
        CHECK(std::abs(series[k] - direct) <= 1e-12);
    }
}

TEST_CASE("fidelity series starts at the initial overlap and stays in range") {
    const Fixture f;
    const auto series = fidelity_series_serial(f.es, f.psi0, f.target, f.times);
    CHECK(series.front() == doctest::Approx(0.0).epsilon(1e-14));
    const auto self = fidelity_series_serial(f.es, f.psi0, f.psi0, {0.0});
    CHECK(self.front() == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : series) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0 + 1e-10);
    }
}

TEST_CASE("norm and energy are conserved along the trajectory") {
    const Fixture f;
    const ConservationSeries cons = conservation_series(f.h, f.es, f.psi0, f.times);
    REQUIRE(cons.norms.size() == f.times.size());
    const double e0 = cons.energies.front();
    const double scale = max_abs(f.h.matrix);
    for (std::size_t k = 0; k < cons.norms.size(); ++k) {
        CHECK(std::abs(cons.norms[k] - 1.0) <= 1e-10);
        CHECK(std::abs(cons.energies[k] - e0) <= 1e-9 * scale);
    }
    // The initial energy is the diagonal element of H at the start state.
    const double expected = (f.psi0.amplitudes.dot(f.h.matrix * f.psi0.amplitudes)).real();
    CHECK(e0 == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("kernels accept an empty and a single-sample grid") {
    const Fixture f;
    CHECK(fidelity_series_serial(f.es, f.psi0, f.target, {}).empty());
    const auto one = fidelity_series_parallel(f.es, f.psi0, f.target, {0.0});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(0.0).epsilon(1e-14));
}
