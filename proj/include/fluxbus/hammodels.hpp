// hammodels.hpp — Hamiltonian builders for every model variant.
//
// Full models (rabi_full, jaynes_cummings, eff_mixed, exact_spins) live on
// qubit (x) photon (x) spin(s); the qubit-eliminated effective models
// (eff_strong, eff_ultra, eff_squeezed) live on photon (x) spin.  All
// builders return Hermitian operators in the qubit eigenbasis with the
// (excited, ground) ordering from qalgebra.
#pragma once

#include "fluxbus/physpar.hpp"
#include "fluxbus/qalgebra.hpp"

#include <string>

namespace fluxbus {

// ---- domain types ----

struct Cutoffs {
    int n_photon = 6;
    int n_spinmode = 6;

    void validate() const; // both >= 2
    bool operator==(const Cutoffs& o) const {
        return n_photon == o.n_photon && n_spinmode == o.n_spinmode;
    }
};

enum class HamiltonianKind {
    rabi_full,
    jaynes_cummings,
    eff_strong,
    eff_ultra,
    eff_squeezed,
    eff_mixed,
    exact_spins,
};

std::string to_string(HamiltonianKind kind);
HamiltonianKind hamiltonian_kind_from_string(const std::string& name);

// True for the models living on photon (x) spin only.
bool is_effective_kind(HamiltonianKind kind);

// Default truncation: 6 levels per mode up to g = 0.1 omega_R, 14 beyond
// (squeezing terms populate higher Fock states).  Always subject to the
// convergence loop in dynamics.
Cutoffs default_cutoffs(const SystemParams& p);

// ---- builders ----

// H = (1/2) wQ sz + wR a'a + wS s's + gQR sx (a'+a) + gQS sx (s'+s).
Operator build_rabi_full(const SystemParams& p, const Cutoffs& cut);

// Rotating-wave form: interaction gQR (s+ a + s- a') + gQS (s+ s + s- s').
Operator build_jc(const SystemParams& p, const Cutoffs& cut);

// Beam splitter on photon (x) spin: w'R a'a + w'S s's + geff (a's + as').
Operator build_eff_strong(const SystemParams& p, const Cutoffs& cut);
Operator build_eff_strong(const EffectiveParams& e, const Cutoffs& cut);

// Non-RWA effective model: adds the counter-rotating coupling and the
// single-mode squeezing terms -(1/2) aR gQR^2 (a'a'+aa) - (1/2) aS gQS^2 (s's'+ss).
Operator build_eff_ultra(const SystemParams& p, const Cutoffs& cut);

// Squeezed frame: photon squeezing absorbed into a dressed mode of frequency
// Omega = w'R (sinh^2 r + cosh^2 r) - 2 aR gQR^2 sinh r cosh r, which equals
// the Bogoliubov frequency sqrt(w'R^2 - (aR gQR^2)^2); the printed form
// carries the opposite sign on the cross term, equivalent under r -> -r, and
// only this sign reproduces the Bogoliubov spectrum with r >= 0.  Coupling is
// scaled by (cosh r - sinh r) = exp(-r); spin squeezing term kept.
Operator build_eff_squeezed(const SystemParams& p, const Cutoffs& cut);

// Mixed regime (qubit ultrastrong to the resonator, strong to the ensemble):
// qubit retained, photon-spin exchange lines plus the linear and three-photon
// qubit-resonator lines with their 2g^3/3 coefficients.
Operator build_eff_mixed(const SystemParams& p, const Cutoffs& cut);

// Exact few-spin reference on qubit (x) photon (x) (spin-1/2)^n, used to
// validate the bosonization.  Built in the lab (flux) frame, where both
// couplings attach to sigma_z, then rotated to the qubit eigenbasis (the
// sigma_z <-> sigma_x exchange at the degeneracy point); the returned
// operator is the eigenbasis one.  Per-spin coupling is g_s = g_qs/sqrt(n).
Operator build_exact_spins(const SystemParams& p, int n_spins, const Cutoffs& cut);

// Lab-frame variant and the rotation implementing the basis change, exposed
// so the rotation itself is testable.
Operator build_exact_spins_lab(const SystemParams& p, int n_spins, const Cutoffs& cut);
Operator qubit_eigenbasis_rotation(const SpaceLabel& space);

// Space of the exact-spin model: qubit, photon, spin1..spinN.
SpaceLabel exact_spins_space(int n_spins, int n_photon);

// Dispatch by kind; n_spins only read for exact_spins.
Operator build_hamiltonian(HamiltonianKind kind, const SystemParams& p,
                           const Cutoffs& cut, int n_spins = 3);

} // namespace fluxbus
