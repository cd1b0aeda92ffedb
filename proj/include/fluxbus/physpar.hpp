// physpar.hpp — closed-form physical parameters and coupling strengths.
//
// Model frequencies are plain frequencies in a declared unit (default MHz)
// with hbar = 1, so energies and frequencies are interchangeable.  SI units
// appear only in the calculators that touch laboratory quantities (fields,
// currents, inductances); each signature states its unit explicitly.
#pragma once

#include <string>

namespace fluxbus {

// ---- constants ----

inline constexpr double k_g_e = 2.0;             // NV electron g-factor
inline constexpr double k_mu_mhz_per_mt = 14.0;  // Bohr magneton as used here, MHz per mT
inline constexpr double k_mu0 = 4.0e-7 * 3.14159265358979323846; // vacuum permeability, N/A^2
inline constexpr double k_planck_h = 6.62607015e-34;             // Planck constant, J s

// ---- domain types ----

// The five model frequencies/couplings of the hybrid circuit.
struct SystemParams {
    double omega_q = 0.0; // flux-qubit splitting (= tunneling energy at the degeneracy point)
    double omega_r = 0.0; // resonator frequency
    double omega_s = 0.0; // spin-ensemble frequency
    double g_qr = 0.0;    // qubit-resonator coupling
    double g_qs = 0.0;    // qubit-ensemble coupling
    std::string unit = "MHz";

    // Throws std::invalid_argument unless frequencies > 0 and couplings >= 0.
    void validate() const;

    double delta_r() const { return omega_q - omega_r; }
    double delta_s() const { return omega_q - omega_s; }
    double eta_r() const { return omega_q + omega_r; }
    double eta_s() const { return omega_q + omega_s; }
};

// Flux-qubit loop and NV-sample geometry, SI units.
struct LoopGeometry {
    double area = 0.0;               // loop area A, m^2
    double aspect = 1.0;             // length-to-width ratio of the rectangular loop
    double thickness = 0.0;          // NV sample thickness d, m
    double persistent_current = 0.0; // I_p, A
    double density = 0.0;            // NV volume density D, m^-3

    void validate() const; // all fields > 0
};

enum class EffectiveRegime { rwa_dispersive, nonrwa_dispersive };

// Coefficients of the qubit-eliminated photon+spin Hamiltonians.
struct EffectiveParams {
    double g_eff = 0.0;         // signed, negative in the dispersive regime
    double omega_r_prime = 0.0;
    double omega_s_prime = 0.0;
    double alpha_r = 0.0;       // 1/delta (rwa) or 1/delta + 1/eta (nonrwa)
    double alpha_s = 0.0;
    EffectiveRegime regime = EffectiveRegime::rwa_dispersive;
};

// ---- calculators ----

// omega_S = D_zfs - g_e * mu * b_parallel, frequencies in MHz, field in mT.
// Throws std::domain_error when the transition frequency would be <= 0.
double nv_transition_frequency(double d_zfs_mhz, double b_parallel_mt);

// Magnetic field at the loop center by the Biot-Savart law for a rectangular
// loop: B = alpha * mu0 * I_p / (4 pi sqrt(A)), alpha = 8 sqrt(beta + 1/beta).
// Returns tesla.
double loop_center_field(const LoopGeometry& geom);

// Single NV coupling g_s = g_e * mu * b / sqrt(2); field in tesla, result MHz.
double single_spin_coupling(double b_fq_tesla);

// Collective coupling g_QS = sqrt(N) * g_s.
double ensemble_coupling_from_count(double n_spins, double g_s);

// g_QS from geometry: sqrt(D A d) * g_s(loop_center_field); the sqrt(A)
// cancels against the field's 1/sqrt(A).  Result MHz.
double ensemble_coupling_from_density(const LoopGeometry& geom);

// Resonator zero-point current I_r0 = sqrt(h * omega_R / L_R); frequency in
// Hz, inductance in henry, result in ampere.
double zero_point_current(double omega_r_hz, double inductance_h);

// g_QR = M * I_p * I_r0 / h; SI inputs, result MHz.
double qubit_resonator_coupling(double mutual_h, double i_p_a, double i_r0_a);

// Dispersive effective parameters with rotating-wave coefficients:
// g_eff = -(1/Delta_R + 1/Delta_S) g_QR g_QS / 2, omega' = omega - g^2/Delta.
// Throws std::domain_error unless Delta_R > 0 and Delta_S > 0.
EffectiveParams effective_rwa(const SystemParams& p);

// Same with counter-rotating contributions: alpha = 1/Delta + 1/eta,
// omega' = omega - alpha g^2, g_eff = -(alpha_R + alpha_S) g_QR g_QS / 2.
EffectiveParams effective_nonrwa(const SystemParams& p);

// Squeezing parameter r >= 0 with sinh^2 r = 2 / (sqrt(b^2-4)(sqrt(b^2-4)+b)),
// b = 2 omega_R / (alpha_R g_QR^2) - 2.  Throws std::domain_error (reporting
// b) when b <= 2, where the squeezed frame is undefined.
double squeeze_parameter(const SystemParams& p);

// Direct ensemble-resonator coupling g_RS = sqrt(N) * g_single.
double direct_ensemble_resonator_coupling(double n_spins, double g_single);

// Convenience spectrum formula omega_Q = sqrt(eps^2 + lambda^2); the bias eps
// is 0 throughout the dynamics, this exists only as a calculator.
double qubit_splitting(double epsilon, double lambda);

} // namespace fluxbus
