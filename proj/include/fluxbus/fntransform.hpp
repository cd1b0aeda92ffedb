// fntransform.hpp — Froehlich-Nakajima generators and numeric effective
// Hamiltonians.
//
// The generator V is chosen so that H_I + [H0, V] = 0; the second-order
// effective Hamiltonian is then H0 + (1/2)[H_I, V], projected onto the qubit
// ground state.  On truncated Fock spaces the cancellation is exact except on
// the top two levels of each mode, so all equivalence norms support excluding
// those boundary levels.
#pragma once

#include "fluxbus/hammodels.hpp"
#include "fluxbus/physpar.hpp"
#include "fluxbus/qalgebra.hpp"

#include <string>

namespace fluxbus {

enum class FnRegime { rwa, nonrwa, mixed };

std::string to_string(FnRegime regime);

// Anti-Hermitian generator with its defining coefficients.  The mixed regime
// (qubit ultrastrong to the resonator only) carries no zeta_S term.
struct Generator {
    Operator v;
    FnRegime regime = FnRegime::rwa;
    double xi_r = 0.0;   // g_QR / Delta_R
    double xi_s = 0.0;   // g_QS / Delta_S
    double zeta_r = 0.0; // g_QR / eta_R (nonrwa, mixed)
    double zeta_s = 0.0; // g_QS / eta_S (nonrwa only)
};

// The split H = H0 + H_I matching a generator regime: H0 is the free part,
// H_I the qubit-mode coupling (full-Rabi form for nonrwa, JC form for rwa,
// the hybrid form for mixed).
struct HamiltonianParts {
    Operator h0;
    Operator hi;
};

HamiltonianParts build_parts(const SystemParams& p, const Cutoffs& cut, FnRegime regime);

// V = xi_R (s- a' - s+ a) + xi_S (s- s' - s+ s) [+ zeta terms per regime].
// Throws std::domain_error at zero or negative detuning.
Generator build_generator(const SystemParams& p, const Cutoffs& cut, FnRegime regime);

// Max-norm of H_I + [H0, V]; with excluded_levels > 0 the norm is taken on
// the subspace whose Fock occupations stay below dim - excluded_levels.
double generator_residual(const Operator& h0, const Operator& hi, const Generator& gen,
                          int excluded_levels = 0);

// project_qubit_ground(H0 + (1/2)[H_I, V]) with the qubit-ground vacuum
// energy subtracted, so vanishing couplings return the free photon+spin
// Hamiltonian exactly.  Refuses to proceed (numeric_error, reporting the
// measured value) when the boundary-excluded residual exceeds `tolerance`
// times max|H_I|.
Operator numeric_effective(const Operator& h0, const Operator& hi, const Generator& gen,
                           double tolerance = 1e-8);

// Exact conjugation exp(-V) H exp(V) without series truncation, quantifying
// what the second-order form drops.
struct ExactEffective {
    Operator full;             // conjugated operator on the full space
    Operator projected;        // qubit-ground block
    double dropped_block_norm; // max |<e,.|conjugated|g,.>|
};

ExactEffective exact_unitary_effective(const Operator& h, const Generator& gen);

} // namespace fluxbus
