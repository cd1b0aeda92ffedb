// test_physpar.cpp — device parameters, coupling chains, dispersive reductions.
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fluxbus/physpar.hpp"

using namespace fluxbus;

namespace {

// Independent field oracle: composite Simpson over the four sides of a
// rectangular loop, evaluated at the loop centre.  Each side of length L at
// distance b/2 contributes int mu0 I / (4 pi) * (b/2) dx / (x^2 + b^2/4)^(3/2)
// over x in [-L/2, L/2]; the four sides pair up for a rectangle a x b.
double side_integral(double half_length, double dist, int panels) {
    auto f = [dist](double x) {
        const double r2 = x * x + dist * dist;
        return dist / (r2 * std::sqrt(r2));
    };
    const double a = -half_length, b = half_length;
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int k = 1; k < panels; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return acc * h / 3.0;
}

double simpson_center_field(double a, double b, double current) {
    const int panels = 4000;
    const double pref = k_mu0 * current / (4.0 * std::acos(-1.0));
    // Two sides of length a at distance b/2, two of length b at distance a/2.
    return pref * (2.0 * side_integral(a / 2.0, b / 2.0, panels) +
                   2.0 * side_integral(b / 2.0, a / 2.0, panels));
}

LoopGeometry reference_loop() {
    LoopGeometry loop;
    loop.area = 250.0e-12;                 // 250 um^2
    loop.aspect = 50.0;
    loop.thickness = 5.0e-6;               // 5 um
    loop.persistent_current = 900.0e-9;    // 900 nA
    loop.density = 3.0e6 * 1.0e18;         // 3e6 um^-3
    return loop;
}

}  // namespace

// ---- NV transition ----

TEST_CASE("nv transition frequency interpolates between zero-field and level crossing") {
    CHECK(nv_transition_frequency(2870.0, 0.0) == doctest::Approx(2870.0).epsilon(1e-15));
    // 10 mT Zeeman shift: 2870 - 28 * 10.
    CHECK(nv_transition_frequency(2870.0, 10.0) == doctest::Approx(2590.0).epsilon(1e-12));
    CHECK_THROWS_AS(nv_transition_frequency(2870.0, 102.5), std::domain_error);
    CHECK_THROWS_AS(nv_transition_frequency(2870.0, 150.0), std::domain_error);
}

// ---- loop field and spin couplings ----

TEST_CASE("loop centre field matches a Simpson quadrature of the segment integrals") {
    // Square loop: area 100 um^2, aspect 1.
    {
        const double side = 10.0e-6;
        LoopGeometry loop = reference_loop();
        loop.area = side * side;
        loop.aspect = 1.0;
        const double oracle = simpson_center_field(side, side, loop.persistent_current);
        CHECK(loop_center_field(loop) == doctest::Approx(oracle).epsilon(1e-9));
    }
    // Elongated loop, aspect 50.
    {
        LoopGeometry loop = reference_loop();
        const double b = std::sqrt(loop.area / loop.aspect);
        const double a = loop.aspect * b;
        const double oracle = simpson_center_field(a, b, loop.persistent_current);
        CHECK(loop_center_field(loop) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("loop centre field is linear in the persistent current") {
    LoopGeometry loop = reference_loop();
    const double b1 = loop_center_field(loop);
    loop.persistent_current *= 2.0;
    CHECK(loop_center_field(loop) == doctest::Approx(2.0 * b1).epsilon(1e-14));
}

TEST_CASE("loop geometry validation rejects non-positive entries") {
    LoopGeometry loop = reference_loop();
    loop.area = 0.0;
    CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
    loop = reference_loop();
    loop.persistent_current = -1.0e-9;
    CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
}

TEST_CASE("single spin coupling converts tesla to megahertz with the transverse factor") {
    CHECK(single_spin_coupling(0.0) == 0.0);
    // 1 mT: 2 * 14 MHz / sqrt(2).
    CHECK(single_spin_coupling(1.0e-3) == doctest::Approx(28.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("ensemble coupling scales as the square root of the spin count") {
    CHECK(ensemble_coupling_from_count(1.0, 0.012) == doctest::Approx(0.012).epsilon(1e-15));
    CHECK(ensemble_coupling_from_count(1.0e8, 0.012) == doctest::Approx(120.0).epsilon(1e-12));
    CHECK(ensemble_coupling_from_count(7.0e7, 0.012) == doctest::Approx(100.4).epsilon(1e-2));
}

TEST_CASE("density-based ensemble coupling doubles when the density quadruples") {
    LoopGeometry loop = reference_loop();
    const double g1 = ensemble_coupling_from_density(loop);
    loop.density *= 4.0;
    CHECK(ensemble_coupling_from_density(loop) == doctest::Approx(2.0 * g1).epsilon(1e-12));
}

TEST_CASE("reference loop parameters give a collective coupling in the hundreds of MHz") {
    const LoopGeometry loop = reference_loop();
    const double g_qs = ensemble_coupling_from_density(loop);
    CHECK(g_qs >= 300.0);
    CHECK(g_qs <= 450.0);
}

// ---- resonator-side couplings ----

TEST_CASE("zero point current follows the square root of frequency over inductance") {
    const double i0 = zero_point_current(5.0e9, 10.0e-9);
    CHECK(i0 == doctest::Approx(1.82017e-8).epsilon(1e-4));
    CHECK(zero_point_current(20.0e9, 10.0e-9) == doctest::Approx(2.0 * i0).epsilon(1e-12));
    CHECK(zero_point_current(5.0e9, 40.0e-9) == doctest::Approx(0.5 * i0).epsilon(1e-12));
}

TEST_CASE("mutual-inductance coupling reproduces the working point value") {
    const double i0 = zero_point_current(5.0e9, 10.0e-9);
    const double g = qubit_resonator_coupling(4.05e-12, 900.0e-9, i0);
    CHECK(g == doctest::Approx(100.13).epsilon(1e-3));
    CHECK(qubit_resonator_coupling(8.10e-12, 900.0e-9, i0) == doctest::Approx(2.0 * g).epsilon(1e-12));
    CHECK(qubit_resonator_coupling(0.0, 900.0e-9, i0) == 0.0);
}

TEST_CASE("qubit splitting combines bias and gap in quadrature") {
    CHECK(qubit_splitting(3.0, 4.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(qubit_splitting(0.0, 2.5) == doctest::Approx(2.5).epsilon(1e-15));
}

// ---- dispersive effective parameters ----

TEST_CASE("rotating-wave effective coupling reproduces the symmetric detuning value") {
    SystemParams p;
    p.omega_q = 6000.0;
    p.omega_r = 5000.0;
    p.omega_s = 5000.0;
    p.g_qr = 100.0;
    p.g_qs = 100.0;
    const EffectiveParams eff = effective_rwa(p);
    CHECK(eff.g_eff == doctest::Approx(-10.0).epsilon(1e-12));
    CHECK(eff.omega_r_prime == doctest::Approx(5000.0 - 10.0).epsilon(1e-12));
    CHECK(eff.omega_s_prime == doctest::Approx(5000.0 - 10.0).epsilon(1e-12));
    CHECK(eff.regime == EffectiveRegime::rwa_dispersive);
}

TEST_CASE("asymmetric couplings average the two inverse detunings") {
    SystemParams p;
    p.omega_q = 6050.0;
    p.omega_r = 5000.0;
    p.omega_s = 5000.0;
    p.g_qr = 350.0;
    p.g_qs = 350.0;
    const EffectiveParams eff = effective_rwa(p);
    // 350^2 / 1050.
    CHECK(std::abs(eff.g_eff) == doctest::Approx(350.0 * 350.0 / 1050.0).epsilon(1e-12));
}

TEST_CASE("zero spin coupling removes both the exchange and the spin shift") {
    SystemParams p;
    p.omega_q = 6000.0;
    p.omega_r = 5000.0;
    p.omega_s = 5000.0;
    p.g_qr = 100.0;
    p.g_qs = 0.0;
    const EffectiveParams eff = effective_rwa(p);
    CHECK(eff.g_eff == 0.0);
    CHECK(eff.omega_s_prime == doctest::Approx(5000.0).epsilon(1e-15));
    CHECK(eff.omega_r_prime < 5000.0);
}

TEST_CASE("rotating-wave reduction requires positive detunings") {
    SystemParams p;
    p.omega_q = 900.0;
    p.omega_r = 1000.0;
    p.omega_s = 1000.0;
    p.g_qr = 10.0;
    p.g_qs = 10.0;
    CHECK_THROWS_AS(effective_rwa(p), std::domain_error);
}

TEST_CASE("counter-rotating reduction matches the published ultrastrong value") {
    SystemParams p;
    p.omega_q = 9.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 1.0;
    p.g_qs = 1.0;
    const EffectiveParams eff = effective_nonrwa(p);
    // alpha = 1/8 + 1/10 on both branches.
    CHECK(eff.alpha_r == doctest::Approx(0.225).epsilon(1e-14));
    CHECK(eff.alpha_s == doctest::Approx(0.225).epsilon(1e-14));
    CHECK(eff.g_eff == doctest::Approx(-0.225).epsilon(1e-12));
    CHECK(eff.omega_r_prime == doctest::Approx(1.0 - 0.225).epsilon(1e-12));
    CHECK(eff.regime == EffectiveRegime::nonrwa_dispersive);
}

TEST_CASE("moderate-coupling reduction reproduces the small transfer rate") {
    SystemParams p;
    p.omega_q = 2.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 0.05;
    p.g_qs = 0.05;
    const EffectiveParams eff = effective_nonrwa(p);
    // alpha = 1 + 1/3; g_eff = -(4/3) * 0.0025.
    CHECK(eff.g_eff == doctest::Approx(-(4.0 / 3.0) * 0.0025).epsilon(1e-12));
}

TEST_CASE("counter-rotating corrections are bounded by the sum-frequency term") {
    // The two reductions differ by (1/eta_R + 1/eta_S) g_QR g_QS / 2 exactly,
    // so the gap closes only when Delta << eta, not merely when the qubit is
    // far detuned.
    SystemParams p;
    p.omega_q = 7.0;
    p.omega_r = 0.9;
    p.omega_s = 1.2;
    p.g_qr = 0.04;
    p.g_qs = 0.08;
    const double a = effective_rwa(p).g_eff;
    const double b = effective_nonrwa(p).g_eff;
    const double eta_min = std::min(p.eta_r(), p.eta_s());
    CHECK(std::abs(a - b) <= p.g_qr * p.g_qs / eta_min * (1.0 + 1e-12));

    SystemParams q = p;
    q.omega_q = 1.001;
    q.omega_r = 1.0;
    q.omega_s = 1.0;
    q.g_qr = 0.0001;
    q.g_qs = 0.0001;
    const double ar = effective_rwa(q).g_eff;
    const double anr = effective_nonrwa(q).g_eff;
    CHECK(std::abs(ar - anr) <= 1.0e-3 * std::abs(ar));
}

TEST_CASE("effective coupling is symmetric under swapping the two branches") {
    SystemParams p;
    p.omega_q = 7.0;
    p.omega_r = 0.9;
    p.omega_s = 1.2;
    p.g_qr = 0.04;
    p.g_qs = 0.08;
    SystemParams q = p;
    std::swap(q.omega_r, q.omega_s);
    std::swap(q.g_qr, q.g_qs);
    CHECK(effective_rwa(p).g_eff == doctest::Approx(effective_rwa(q).g_eff).epsilon(1e-14));
    CHECK(effective_nonrwa(p).g_eff == doctest::Approx(effective_nonrwa(q).g_eff).epsilon(1e-14));
}

TEST_CASE("effective coupling grows with g and shrinks with qubit frequency") {
    std::vector<double> gs = {0.01, 0.02, 0.05, 0.1};
    double prev = 0.0;
    for (double g : gs) {
        SystemParams p;
        p.omega_q = 5.0;
        p.omega_r = 1.0;
        p.omega_s = 1.0;
        p.g_qr = g;
        p.g_qs = g;
        const double v = std::abs(effective_nonrwa(p).g_eff);
        CHECK(v > prev);
        prev = v;
    }
    std::vector<double> wqs = {3.0, 5.0, 8.0, 12.0};
    prev = 1e300;
    for (double wq : wqs) {
        SystemParams p;
        p.omega_q = wq;
        p.omega_r = 1.0;
        p.omega_s = 1.0;
        p.g_qr = 0.05;
        p.g_qs = 0.05;
        const double v = std::abs(effective_nonrwa(p).g_eff);
        CHECK(v < prev);
        prev = v;
    }
}

// ---- squeezing parameter ----

TEST_CASE("squeeze parameter reproduces the ultrastrong working point") {
    SystemParams p;
    p.omega_q = 9.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 1.0;
    p.g_qs = 1.0;
    const double r = squeeze_parameter(p);
    // Exact arithmetic for this point: sinh^2 r = 162 / (3520 + 496 sqrt(55)).
    const double sh2 = 162.0 / (3520.0 + 496.0 * std::sqrt(55.0));
    CHECK(std::sinh(r) * std::sinh(r) == doctest::Approx(sh2).epsilon(1e-12));
    CHECK(r == doctest::Approx(0.149).epsilon(5e-3));
}

TEST_CASE("squeeze parameter vanishes with the resonator coupling") {
    SystemParams p;
    p.omega_q = 9.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 0.0;
    p.g_qs = 1.0;
    CHECK(squeeze_parameter(p) == 0.0);
    p.g_qr = 1.0e-4;
    CHECK(squeeze_parameter(p) <= 1.0e-8);
}

TEST_CASE("squeeze parameter rejects parameters outside the stable window") {
    SystemParams p;
    p.omega_q = 2.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 1.0;
    p.g_qs = 1.0;
    CHECK_THROWS_AS(squeeze_parameter(p), std::domain_error);
}

// ---- direct ensemble-resonator baseline ----

TEST_CASE("direct coupling baseline needs four extra orders of magnitude in spins") {
    // 10 Hz single-spin coupling, expressed in MHz.
    const double g_single = 1.0e-5;
    CHECK(direct_ensemble_resonator_coupling(1.0, g_single) == doctest::Approx(g_single).epsilon(1e-15));
    CHECK(direct_ensemble_resonator_coupling(1.0e12, g_single) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(direct_ensemble_resonator_coupling(1.0e8, g_single) == doctest::Approx(0.1).epsilon(1e-12));

    // The hybrid chain reaches 12 MHz at N = 1e8; the direct chain needs 1.44e12.
    const double n_direct = std::pow(12.0 / g_single, 2.0);
    CHECK(n_direct == doctest::Approx(1.44e12).epsilon(1e-12));
    CHECK(n_direct / 1.0e8 >= 1.0e3);
}

TEST_CASE("system parameter validation flags non-positive frequencies") {
    SystemParams p;
    p.omega_q = 2.0;
    p.omega_r = 1.0;
    p.omega_s = 1.0;
    p.g_qr = 0.05;
    p.g_qs = 0.05;
    CHECK_NOTHROW(p.validate());
    p.omega_r = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.omega_r = 1.0;
    p.g_qr = -0.05;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
