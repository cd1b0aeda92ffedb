// physpar.cpp — closed-form parameter calculators.
#include "fluxbus/physpar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fluxbus {

void SystemParams::validate() const {
    if (!(omega_q > 0.0) || !(omega_r > 0.0) || !(omega_s > 0.0))
        throw std::invalid_argument("SystemParams: all frequencies must be > 0");
    if (g_qr < 0.0 || g_qs < 0.0)
        throw std::invalid_argument("SystemParams: couplings must be >= 0");
}

void LoopGeometry::validate() const {
    if (!(area > 0.0) || !(aspect > 0.0) || !(thickness > 0.0) ||
        !(persistent_current > 0.0) || !(density > 0.0))
        throw std::invalid_argument("LoopGeometry: all fields must be > 0");
}

double nv_transition_frequency(double d_zfs_mhz, double b_parallel_mt) {
    double omega = d_zfs_mhz - k_g_e * k_mu_mhz_per_mt * b_parallel_mt;
    if (omega <= 0.0)
        throw std::domain_error("nv_transition_frequency: field " + std::to_string(b_parallel_mt) +
                                " mT drives the transition frequency to " +
                                std::to_string(omega) + " MHz (must stay > 0)");
    return omega;
}

double loop_center_field(const LoopGeometry& geom) {
    geom.validate();
    double alpha = 8.0 * std::sqrt(geom.aspect + 1.0 / geom.aspect);
    return alpha * k_mu0 * geom.persistent_current /
           (4.0 * std::numbers::pi * std::sqrt(geom.area));
}

double single_spin_coupling(double b_fq_tesla) {
    if (b_fq_tesla < 0.0)
        throw std::invalid_argument("single_spin_coupling: field must be >= 0");
    // k_mu_mhz_per_mt is per millitesla; 1 T = 1e3 mT.
    return k_g_e * k_mu_mhz_per_mt * 1.0e3 * b_fq_tesla / std::numbers::sqrt2;
}

double ensemble_coupling_from_count(double n_spins, double g_s) {
    if (n_spins < 1.0)
        throw std::invalid_argument("ensemble_coupling_from_count: need at least one spin");
    return std::sqrt(n_spins) * g_s;
}

double ensemble_coupling_from_density(const LoopGeometry& geom) {
    geom.validate();
    double n = geom.density * geom.area * geom.thickness;
    return std::sqrt(n) * single_spin_coupling(loop_center_field(geom));
}

double zero_point_current(double omega_r_hz, double inductance_h) {
    if (!(omega_r_hz > 0.0) || !(inductance_h > 0.0))
        throw std::invalid_argument("zero_point_current: frequency and inductance must be > 0");
    return std::sqrt(k_planck_h * omega_r_hz / inductance_h);
}

double qubit_resonator_coupling(double mutual_h, double i_p_a, double i_r0_a) {
    if (mutual_h < 0.0 || i_p_a < 0.0 || i_r0_a < 0.0)
        throw std::invalid_argument("qubit_resonator_coupling: inputs must be >= 0");
    return mutual_h * i_p_a * i_r0_a / k_planck_h / 1.0e6; // Hz -> MHz
}

EffectiveParams effective_rwa(const SystemParams& p) {
    p.validate();
    if (!(p.delta_r() > 0.0) || !(p.delta_s() > 0.0))
        throw std::domain_error("effective_rwa: dispersive regime requires Delta_R > 0 and Delta_S > 0");
    EffectiveParams e;
    e.regime = EffectiveRegime::rwa_dispersive;
    e.alpha_r = 1.0 / p.delta_r();
    e.alpha_s = 1.0 / p.delta_s();
    e.g_eff = -0.5 * (e.alpha_r + e.alpha_s) * p.g_qr * p.g_qs;
    e.omega_r_prime = p.omega_r - e.alpha_r * p.g_qr * p.g_qr;
    e.omega_s_prime = p.omega_s - e.alpha_s * p.g_qs * p.g_qs;
    return e;
}

EffectiveParams effective_nonrwa(const SystemParams& p) {
    p.validate();
    if (!(p.delta_r() > 0.0) || !(p.delta_s() > 0.0))
        throw std::domain_error("effective_nonrwa: dispersive regime requires Delta_R > 0 and Delta_S > 0");
    EffectiveParams e;
    e.regime = EffectiveRegime::nonrwa_dispersive;
    e.alpha_r = 1.0 / p.delta_r() + 1.0 / p.eta_r();
    e.alpha_s = 1.0 / p.delta_s() + 1.0 / p.eta_s();
    e.g_eff = -0.5 * (e.alpha_r + e.alpha_s) * p.g_qr * p.g_qs;
    e.omega_r_prime = p.omega_r - e.alpha_r * p.g_qr * p.g_qr;
    e.omega_s_prime = p.omega_s - e.alpha_s * p.g_qs * p.g_qs;
    return e;
}

double squeeze_parameter(const SystemParams& p) {
    EffectiveParams e = effective_nonrwa(p);
    if (p.g_qr == 0.0) return 0.0; // beta -> infinity, no squeezing
    double beta = 2.0 * p.omega_r / (e.alpha_r * p.g_qr * p.g_qr) - 2.0;
    if (beta <= 2.0)
        throw std::domain_error("squeeze_parameter: squeezing beta = " + std::to_string(beta) +
                                " <= 2, squeezed frame undefined");
    double root = std::sqrt(beta * beta - 4.0);
    double sinh2 = 2.0 / (root * (root + beta));
    return std::asinh(std::sqrt(sinh2));
}

double direct_ensemble_resonator_coupling(double n_spins, double g_single) {
    if (n_spins < 1.0)
        throw std::invalid_argument("direct_ensemble_resonator_coupling: need at least one spin");
    return std::sqrt(n_spins) * g_single;
}

double qubit_splitting(double epsilon, double lambda) {
    return std::hypot(epsilon, lambda);
}

} // namespace fluxbus
