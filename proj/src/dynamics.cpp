// dynamics.cpp — transfer experiments and sweeps.
#include "fluxbus/dynamics.hpp"

#include "fluxbus/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fluxbus {

namespace {

constexpr double k_traj_tol = 1e-4; // trajectory convergence threshold
constexpr int k_dim_cap = 40;       // hard cap per mode

std::vector<double> time_grid(double t_max, int n_steps) {
    std::vector<double> ts(n_steps);
    for (int i = 0; i < n_steps; ++i)
        ts[i] = t_max * static_cast<double>(i) / static_cast<double>(n_steps - 1);
    return ts;
}

} // namespace

void TransferConfig::validate() const {
    params.validate();
    cut.validate();
    if (n_steps < 2) throw std::invalid_argument("TransferConfig: n_steps must be >= 2");
    if (!(t_max > 0.0)) throw std::invalid_argument("TransferConfig: t_max must be > 0");
    if (gamma_def != "g_eff_nonrwa")
        throw std::invalid_argument("TransferConfig: unsupported gamma_def '" + gamma_def + "'");
    if (hamiltonian_kind == HamiltonianKind::exact_spins && (n_spins < 1 || n_spins > 6))
        throw std::invalid_argument("TransferConfig: n_spins must be in [1, 6]");
}

// ---- elementary operations ----

std::vector<StateVector> evolve(const Operator& h, const StateVector& psi0,
                                const std::vector<double>& times) {
    if (psi0.space != h.space)
        throw std::invalid_argument("evolve: state and operator spaces differ");
    Eigensystem es = eigensystem(h);
    Vector c0 = es.eigenvectors.adjoint() * psi0.amplitudes;
    std::vector<StateVector> out;
    out.reserve(times.size());
    for (double t : times) {
        Vector phases(c0.size());
        for (int k = 0; k < c0.size(); ++k)
            phases(k) = std::exp(Cplx(0, -es.eigenvalues(k) * t)) * c0(k);
        out.push_back(StateVector{h.space, es.eigenvectors * phases});
    }
    return out;
}

double fidelity(const StateVector& target, const StateVector& psi) {
    if (target.space != psi.space)
        throw std::invalid_argument("fidelity: states live on different spaces");
    return std::norm(target.amplitudes.dot(psi.amplitudes));
}

double transfer_rate(const SystemParams& p) {
    double g = std::abs(effective_nonrwa(p).g_eff);
    return g > 0.0 ? g : p.omega_r;
}

SpaceLabel state_space(HamiltonianKind kind, const Cutoffs& cut, int n_spins) {
    if (is_effective_kind(kind)) return photon_spin_space(cut.n_photon, cut.n_spinmode);
    if (kind == HamiltonianKind::exact_spins) return exact_spins_space(n_spins, cut.n_photon);
    return qubit_photon_spin_space(cut.n_photon, cut.n_spinmode);
}

namespace {

StateVector symmetric_spin_excitation(const SpaceLabel& space, int n_spins) {
    Vector v = Vector::Zero(space.total_dim());
    for (int j = 1; j <= n_spins; ++j) {
        // qubit ground (1), photon vacuum, spin j excited (index 0), rest ground.
        std::vector<int> occ(space.factors.size(), 1);
        occ[1] = 0;
        occ[1 + j] = 0;
        v += basis_state(space, occ).amplitudes;
    }
    v /= std::sqrt(static_cast<double>(n_spins));
    return StateVector{space, std::move(v)};
}

} // namespace

StateVector resolve_state(const StateSpec& spec, HamiltonianKind kind,
                          const Cutoffs& cut, int n_spins, bool is_initial) {
    SpaceLabel space = state_space(kind, cut, n_spins);
    if (!spec.occupations.empty() && !spec.amplitudes.empty())
        throw std::invalid_argument("state spec: give occupations or amplitudes, not both");
    if (!spec.occupations.empty()) return basis_state(space, spec.occupations);
    if (!spec.amplitudes.empty()) {
        if (static_cast<int>(spec.amplitudes.size()) != space.total_dim())
            throw std::invalid_argument("state spec: amplitude count does not match space dimension");
        Vector v(space.total_dim());
        for (int i = 0; i < space.total_dim(); ++i) v(i) = spec.amplitudes[i];
        if (std::abs(v.norm() - 1.0) > 1e-10)
            throw std::invalid_argument("state spec: amplitudes must be normalized within 1e-10");
        return StateVector{space, std::move(v)};
    }
    // Defaults: transfer the spin excitation into the photon mode.
    if (is_effective_kind(kind))
        return basis_state(space, is_initial ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
    if (kind == HamiltonianKind::exact_spins) {
        if (is_initial) return symmetric_spin_excitation(space, n_spins);
        std::vector<int> occ(space.factors.size(), 1);
        occ[1] = 1; // one photon
        return basis_state(space, occ);
    }
    return basis_state(space, is_initial ? std::vector<int>{1, 0, 1} : std::vector<int>{1, 1, 0});
}

// ---- experiments ----

namespace {

std::vector<double> trajectory_at(const TransferConfig& cfg, const Cutoffs& cut,
                                  const std::vector<double>& phys_times) {
    Operator h = build_hamiltonian(cfg.hamiltonian_kind, cfg.params, cut, cfg.n_spins);
    StateVector psi0 = resolve_state(cfg.initial, cfg.hamiltonian_kind, cut, cfg.n_spins, true);
    StateVector target = resolve_state(cfg.target, cfg.hamiltonian_kind, cut, cfg.n_spins, false);
    Eigensystem es = eigensystem(h);
    std::vector<double> f = fidelity_series_parallel(es, psi0, target, phys_times);
    for (double value : f)
        if (value > 1.0 + 1e-10)
            throw numeric_error("transfer: fidelity " + std::to_string(value) + " above 1 + 1e-10");
    return f;
}

Cutoffs doubled(const Cutoffs& cut) {
    return Cutoffs{std::min(2 * cut.n_photon, k_dim_cap), std::min(2 * cut.n_spinmode, k_dim_cap)};
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct ConvergenceRun {
    Cutoffs accepted;
    bool converged = false;
    std::vector<double> trajectory; // at the accepted cutoffs
};

ConvergenceRun converge_trajectory(const TransferConfig& cfg,
                                   const std::vector<double>& phys_times) {
    Cutoffs cur = cfg.cut;
    std::vector<double> traj_cur = trajectory_at(cfg, cur, phys_times);
    for (;;) {
        Cutoffs next = doubled(cur);
        if (next == cur) return ConvergenceRun{cur, false, std::move(traj_cur)};
        std::vector<double> traj_next = trajectory_at(cfg, next, phys_times);
        if (max_diff(traj_cur, traj_next) < k_traj_tol)
            return ConvergenceRun{cur, true, std::move(traj_cur)};
        cur = next;
        traj_cur = std::move(traj_next);
    }
}

std::vector<double> physical_times(const TransferConfig& cfg, double gamma) {
    std::vector<double> ts = time_grid(cfg.t_max, cfg.n_steps);
    for (double& t : ts) t /= gamma;
    return ts;
}

} // namespace

ConvergedCutoffs cutoff_convergence(const TransferConfig& cfg) {
    cfg.validate();
    double gamma = transfer_rate(cfg.params);
    ConvergenceRun run = converge_trajectory(cfg, physical_times(cfg, gamma));
    return ConvergedCutoffs{run.accepted, run.converged};
}

TransferResult transfer_experiment(const TransferConfig& cfg) {
    cfg.validate();
    double gamma = transfer_rate(cfg.params);
    std::vector<double> phys = physical_times(cfg, gamma);
    ConvergenceRun run = converge_trajectory(cfg, phys);

    TransferResult result;
    result.times = time_grid(cfg.t_max, cfg.n_steps);
    result.fidelity = std::move(run.trajectory);
    result.gamma = gamma;
    result.cutoffs_used = run.accepted;
    result.converged = run.converged;
    auto peak = std::max_element(result.fidelity.begin(), result.fidelity.end());
    result.peak_fidelity = *peak;
    result.peak_time = result.times[static_cast<size_t>(peak - result.fidelity.begin())];
    return result;
}

std::vector<CouplingSweepRow> sweep_coupling(const TransferConfig& base,
                                             const std::vector<double>& g_values) {
    for (double g : g_values)
        if (!(g > 0.0)) throw std::invalid_argument("sweep_coupling: g values must be > 0");
    std::vector<CouplingSweepRow> rows(g_values.size());
    const long n = static_cast<long>(g_values.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long i = 0; i < n; ++i) {
        TransferConfig cfg = base;
        cfg.params.g_qr = g_values[i] * base.params.omega_r;
        cfg.params.g_qs = cfg.params.g_qr;
        cfg.cut = default_cutoffs(cfg.params);
        TransferResult res = transfer_experiment(cfg);
        rows[i] = CouplingSweepRow{g_values[i], res.peak_fidelity, res.cutoffs_used, res.converged};
    }
    return rows;
}

std::vector<EnsembleSweepRow> sweep_ensemble_size(const std::vector<double>& n_values,
                                                  double g_single_hybrid,
                                                  double g_single_direct,
                                                  double g_qr, double delta) {
    if (!(g_single_hybrid > 0.0) || !(g_single_direct > 0.0) || !(g_qr > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("sweep_ensemble_size: inputs must be > 0");
    std::vector<EnsembleSweepRow> rows;
    rows.reserve(n_values.size());
    // The base frequency drops out of g_eff; only the detunings enter.
    const double base = 5000.0;
    for (double n : n_values) {
        if (!(n >= 1.0)) throw std::invalid_argument("sweep_ensemble_size: N must be >= 1");
        SystemParams p;
        p.omega_r = base;
        p.omega_s = base;
        p.omega_q = base + delta;
        p.g_qr = g_qr;
        p.g_qs = ensemble_coupling_from_count(n, g_single_hybrid);
        EffectiveParams e = effective_rwa(p);
        rows.push_back(EnsembleSweepRow{n, std::abs(e.g_eff),
                                        direct_ensemble_resonator_coupling(n, g_single_direct)});
    }
    return rows;
}

ConservationReport conservation_report(const TransferConfig& cfg, const Cutoffs& cut) {
    cfg.validate();
    double gamma = transfer_rate(cfg.params);
    Operator h = build_hamiltonian(cfg.hamiltonian_kind, cfg.params, cut, cfg.n_spins);
    StateVector psi0 = resolve_state(cfg.initial, cfg.hamiltonian_kind, cut, cfg.n_spins, true);
    Eigensystem es = eigensystem(h);
    ConservationSeries series = conservation_series(h, es, psi0, physical_times(cfg, gamma));

    ConservationReport report;
    report.h_scale = max_abs(h.matrix);
    for (double nrm : series.norms)
        report.max_norm_deviation = std::max(report.max_norm_deviation, std::abs(nrm - 1.0));
    for (double e : series.energies)
        report.max_energy_drift = std::max(report.max_energy_drift, std::abs(e - series.energies[0]));
    return report;
}

} // namespace fluxbus
