// dynamics.hpp — time evolution, state-transfer fidelity, sweeps, cutoff
// convergence.
//
// Transfer experiments report fidelity against the dimensionless time
// gamma*t with gamma = |g_eff| from physpar::effective_nonrwa (falling back
// to omega_R when the effective coupling vanishes, so the grid stays
// defined).  A trajectory counts as converged when doubling the cutoffs
// (hard cap 40 per mode) changes it by less than 1e-4 in max norm; the
// smaller cutoff that passed the certificate is the accepted one.
#pragma once

#include "fluxbus/hammodels.hpp"
#include "fluxbus/kernels.hpp"
#include "fluxbus/physpar.hpp"
#include "fluxbus/qalgebra.hpp"

#include <vector>

namespace fluxbus {

// ---- configuration ----

// A state given either as a basis occupation list (one entry per factor) or
// as an explicit normalized amplitude vector; empty means the kind-specific
// default (spin excitation -> photon).
struct StateSpec {
    std::vector<int> occupations;
    std::vector<Cplx> amplitudes;

    bool is_default() const { return occupations.empty() && amplitudes.empty(); }
};

struct TransferConfig {
    HamiltonianKind hamiltonian_kind = HamiltonianKind::rabi_full;
    SystemParams params;
    Cutoffs cut;
    double t_max = 4.0;  // in units of 1/gamma
    int n_steps = 2001;
    StateSpec initial;
    StateSpec target;
    int n_spins = 3;     // exact_spins only
    std::string gamma_def = "g_eff_nonrwa"; // the only supported definition

    void validate() const;
};

struct TransferResult {
    std::vector<double> times;    // gamma * t
    std::vector<double> fidelity; // same length
    double peak_time = 0.0;       // gamma * t at the max
    double peak_fidelity = 0.0;
    double gamma = 0.0;           // the rate that defined the grid
    Cutoffs cutoffs_used;
    bool converged = false;
};

// ---- elementary operations ----

// psi(t) = exp(-iHt) psi0 for each time, via one spectral decomposition.
std::vector<StateVector> evolve(const Operator& h, const StateVector& psi0,
                                const std::vector<double>& times);

// |<target|psi>|^2.
double fidelity(const StateVector& target, const StateVector& psi);

// The gamma behind the dimensionless time axis.
double transfer_rate(const SystemParams& p);

// Space and resolved initial/target states for a kind at given cutoffs.
SpaceLabel state_space(HamiltonianKind kind, const Cutoffs& cut, int n_spins);
StateVector resolve_state(const StateSpec& spec, HamiltonianKind kind,
                          const Cutoffs& cut, int n_spins, bool is_initial);

// ---- experiments ----

struct ConvergedCutoffs {
    Cutoffs accepted;
    bool converged = false;
};

// Double cutoffs until the fidelity trajectory moves < 1e-4 in max norm.
ConvergedCutoffs cutoff_convergence(const TransferConfig& cfg);

// Full experiment: convergence loop, then the trajectory at the accepted
// cutoffs.  Non-convergence is flagged in the result, never silent.
TransferResult transfer_experiment(const TransferConfig& cfg);

struct CouplingSweepRow {
    double g = 0.0; // in units of omega_r
    double peak_fidelity = 0.0;
    Cutoffs cutoffs_used;
    bool converged = false;
};

// For each g set g_qr = g_qs = g * omega_r and run transfer_experiment with
// the default cutoffs for that coupling; rows come back in input order.
std::vector<CouplingSweepRow> sweep_coupling(const TransferConfig& base,
                                             const std::vector<double>& g_values);

struct EnsembleSweepRow {
    double n_spins = 0.0;
    double g_eff_hybrid = 0.0; // magnitude
    double g_rs_direct = 0.0;
};

// Hybrid vs direct coupling as a function of ensemble size: g_QS = sqrt(N) *
// g_single_hybrid, g_eff from effective_rwa at Delta_R = Delta_S = delta, and
// g_RS = sqrt(N) * g_single_direct.  Frequencies in MHz.
std::vector<EnsembleSweepRow> sweep_ensemble_size(const std::vector<double>& n_values,
                                                  double g_single_hybrid,
                                                  double g_single_direct,
                                                  double g_qr, double delta);

// ---- conservation checks ----

struct ConservationReport {
    double max_norm_deviation = 0.0; // max | ||psi(t)|| - 1 |
    double max_energy_drift = 0.0;   // max |E(t) - E(0)|
    double h_scale = 0.0;            // max |H| elementwise
};

// Norm/energy conservation along the trajectory of cfg at the given cutoffs.
ConservationReport conservation_report(const TransferConfig& cfg, const Cutoffs& cut);

} // namespace fluxbus
