// hammodels.cpp — Hamiltonian builders.
#include "fluxbus/hammodels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fluxbus {

void Cutoffs::validate() const {
    if (n_photon < 2 || n_spinmode < 2)
        throw std::invalid_argument("Cutoffs: both truncation dims must be >= 2");
}

std::string to_string(HamiltonianKind kind) {
    switch (kind) {
    case HamiltonianKind::rabi_full: return "rabi_full";
    case HamiltonianKind::jaynes_cummings: return "jaynes_cummings";
    case HamiltonianKind::eff_strong: return "eff_strong";
    case HamiltonianKind::eff_ultra: return "eff_ultra";
    case HamiltonianKind::eff_squeezed: return "eff_squeezed";
    case HamiltonianKind::eff_mixed: return "eff_mixed";
    case HamiltonianKind::exact_spins: return "exact_spins";
    }
    throw std::invalid_argument("to_string: bad HamiltonianKind");
}

HamiltonianKind hamiltonian_kind_from_string(const std::string& name) {
    if (name == "rabi_full") return HamiltonianKind::rabi_full;
    if (name == "jaynes_cummings") return HamiltonianKind::jaynes_cummings;
    if (name == "eff_strong") return HamiltonianKind::eff_strong;
    if (name == "eff_ultra") return HamiltonianKind::eff_ultra;
    if (name == "eff_squeezed") return HamiltonianKind::eff_squeezed;
    if (name == "eff_mixed") return HamiltonianKind::eff_mixed;
    if (name == "exact_spins") return HamiltonianKind::exact_spins;
    throw std::invalid_argument("unknown hamiltonian kind '" + name + "'");
}

bool is_effective_kind(HamiltonianKind kind) {
    return kind == HamiltonianKind::eff_strong || kind == HamiltonianKind::eff_ultra ||
           kind == HamiltonianKind::eff_squeezed;
}

Cutoffs default_cutoffs(const SystemParams& p) {
    double g = std::max(p.g_qr, p.g_qs);
    int n = (g <= 0.1 * p.omega_r) ? 6 : 14;
    return Cutoffs{n, n};
}

// ---- full three-factor models ----

namespace {

struct ThreeFactor {
    SpaceLabel space;
    Matrix a, ad, s, sd; // single-factor ladder matrices
};

ThreeFactor three_factor(const Cutoffs& cut) {
    cut.validate();
    ThreeFactor t;
    t.space = qubit_photon_spin_space(cut.n_photon, cut.n_spinmode);
    t.a = fock_lower(cut.n_photon);
    t.ad = t.a.adjoint();
    t.s = fock_lower(cut.n_spinmode);
    t.sd = t.s.adjoint();
    return t;
}

} // namespace

Operator build_rabi_full(const SystemParams& p, const Cutoffs& cut) {
    p.validate();
    ThreeFactor t = three_factor(cut);
    Matrix h = 0.5 * p.omega_q * embed(t.space, {{"qubit", pauli(PauliKind::z)}}).matrix +
               p.omega_r * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               p.omega_s * embed(t.space, {{"spin", t.sd * t.s}}).matrix +
               p.g_qr * embed(t.space, {{"qubit", pauli(PauliKind::x)}, {"photon", t.ad + t.a}}).matrix +
               p.g_qs * embed(t.space, {{"qubit", pauli(PauliKind::x)}, {"spin", t.sd + t.s}}).matrix;
    return Operator{t.space, std::move(h)};
}

Operator build_jc(const SystemParams& p, const Cutoffs& cut) {
    p.validate();
    ThreeFactor t = three_factor(cut);
    Matrix h = 0.5 * p.omega_q * embed(t.space, {{"qubit", pauli(PauliKind::z)}}).matrix +
               p.omega_r * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               p.omega_s * embed(t.space, {{"spin", t.sd * t.s}}).matrix +
               p.g_qr * (embed(t.space, {{"qubit", pauli(PauliKind::plus)}, {"photon", t.a}}).matrix +
                         embed(t.space, {{"qubit", pauli(PauliKind::minus)}, {"photon", t.ad}}).matrix) +
               p.g_qs * (embed(t.space, {{"qubit", pauli(PauliKind::plus)}, {"spin", t.s}}).matrix +
                         embed(t.space, {{"qubit", pauli(PauliKind::minus)}, {"spin", t.sd}}).matrix);
    return Operator{t.space, std::move(h)};
}

// ---- qubit-eliminated models on photon (x) spin ----

namespace {

struct TwoFactor {
    SpaceLabel space;
    Matrix a, ad, s, sd;
};

TwoFactor two_factor(const Cutoffs& cut) {
    cut.validate();
    TwoFactor t;
    t.space = photon_spin_space(cut.n_photon, cut.n_spinmode);
    t.a = fock_lower(cut.n_photon);
    t.ad = t.a.adjoint();
    t.s = fock_lower(cut.n_spinmode);
    t.sd = t.s.adjoint();
    return t;
}

} // namespace

Operator build_eff_strong(const EffectiveParams& e, const Cutoffs& cut) {
    TwoFactor t = two_factor(cut);
    Matrix h = e.omega_r_prime * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               e.omega_s_prime * embed(t.space, {{"spin", t.sd * t.s}}).matrix +
               e.g_eff * (embed(t.space, {{"photon", t.ad}, {"spin", t.s}}).matrix +
                          embed(t.space, {{"photon", t.a}, {"spin", t.sd}}).matrix);
    return Operator{t.space, std::move(h)};
}

Operator build_eff_strong(const SystemParams& p, const Cutoffs& cut) {
    return build_eff_strong(effective_rwa(p), cut);
}

namespace {

// geff (a'+a)(s'+s) + squeezing terms, shared by eff_ultra and eff_squeezed.
Matrix spin_squeeze_term(const TwoFactor& t, double alpha_s, double g_qs) {
    return -0.5 * alpha_s * g_qs * g_qs *
           embed(t.space, {{"spin", Matrix(t.sd * t.sd + t.s * t.s)}}).matrix;
}

} // namespace

Operator build_eff_ultra(const SystemParams& p, const Cutoffs& cut) {
    EffectiveParams e = effective_nonrwa(p);
    TwoFactor t = two_factor(cut);
    Matrix h = e.omega_r_prime * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               e.omega_s_prime * embed(t.space, {{"spin", t.sd * t.s}}).matrix +
               e.g_eff * embed(t.space, {{"photon", t.ad + t.a}, {"spin", t.sd + t.s}}).matrix -
               0.5 * e.alpha_r * p.g_qr * p.g_qr *
                   embed(t.space, {{"photon", Matrix(t.ad * t.ad + t.a * t.a)}}).matrix +
               spin_squeeze_term(t, e.alpha_s, p.g_qs);
    return Operator{t.space, std::move(h)};
}

Operator build_eff_squeezed(const SystemParams& p, const Cutoffs& cut) {
    EffectiveParams e = effective_nonrwa(p);
    double r = squeeze_parameter(p);
    double ch = std::cosh(r), sh = std::sinh(r);
    double omega_dressed = e.omega_r_prime * (sh * sh + ch * ch) -
                           2.0 * e.alpha_r * p.g_qr * p.g_qr * sh * ch;
    TwoFactor t = two_factor(cut);
    Matrix h = omega_dressed * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               e.omega_s_prime * embed(t.space, {{"spin", t.sd * t.s}}).matrix +
               spin_squeeze_term(t, e.alpha_s, p.g_qs) +
               e.g_eff * (ch - sh) *
                   embed(t.space, {{"photon", t.ad + t.a}, {"spin", t.sd + t.s}}).matrix;
    return Operator{t.space, std::move(h)};
}

// ---- mixed regime ----

Operator build_eff_mixed(const SystemParams& p, const Cutoffs& cut) {
    EffectiveParams e = effective_nonrwa(p);
    ThreeFactor t = three_factor(cut);
    const Matrix sp = pauli(PauliKind::plus);
    const Matrix sm = pauli(PauliKind::minus);
    const Matrix& a = t.a;
    const Matrix& ad = t.ad;

    auto qp = [&](const Matrix& q, const Matrix& ph) {
        return embed(t.space, {{"qubit", q}, {"photon", ph}}).matrix;
    };

    // Free part; the source form leaves the qubit splitting implicit, it is
    // kept here so the retained qubit costs energy.
    Matrix h = 0.5 * p.omega_q * embed(t.space, {{"qubit", pauli(PauliKind::z)}}).matrix +
               e.omega_r_prime * embed(t.space, {{"photon", t.ad * t.a}}).matrix +
               e.omega_s_prime * embed(t.space, {{"spin", t.sd * t.s}}).matrix;

    // Photon-spin exchange lines.
    h += -(p.g_qr * p.g_qs / (2.0 * p.delta_s())) *
             embed(t.space, {{"photon", t.ad + t.a}, {"spin", t.sd + t.s}}).matrix;
    h += -(p.g_qr * p.g_qs / (2.0 * p.delta_r())) *
             (embed(t.space, {{"photon", t.ad}, {"spin", t.s}}).matrix +
              embed(t.space, {{"photon", t.a}, {"spin", t.sd}}).matrix);
    h += -(p.g_qr * p.g_qs / (2.0 * p.eta_r())) *
             (embed(t.space, {{"photon", t.ad}, {"spin", t.sd}}).matrix +
              embed(t.space, {{"photon", t.a}, {"spin", t.s}}).matrix);

    // Linear qubit-photon exchange lines.
    double c3 = e.alpha_r * 2.0 * std::pow(p.g_qr, 3) / 3.0;
    h += -(c3 / p.eta_r()) * (qp(sp, a) + qp(sm, ad) + 2.0 * qp(sp, ad) + 2.0 * qp(sm, a));
    h += -(c3 / p.delta_r()) * (qp(sp, ad) + qp(sm, a) + 2.0 * qp(sp, a) + 2.0 * qp(sm, ad));

    // Three-photon lines.
    Matrix aaa = a * a * a, adadad = ad * ad * ad;
    Matrix ad_aa = ad * a * a, adad_a = ad * ad * a;
    h += -(c3 / p.eta_r()) * (qp(sp, adadad) + qp(sp, ad_aa) + 2.0 * qp(sp, adad_a) +
                              qp(sm, aaa) + qp(sm, adad_a) + 2.0 * qp(sm, ad_aa));
    h += -(c3 / p.delta_r()) * (qp(sm, adadad) + qp(sm, ad_aa) + 2.0 * qp(sm, adad_a) +
                                qp(sp, aaa) + qp(sp, adad_a) + 2.0 * qp(sp, ad_aa));

    return Operator{t.space, std::move(h)};
}

// ---- exact few-spin reference ----

SpaceLabel exact_spins_space(int n_spins, int n_photon) {
    if (n_spins < 1 || n_spins > 6)
        throw std::invalid_argument("exact_spins: n_spins must be in [1, 6]");
    SpaceLabel space{{{"qubit", 2}, {"photon", n_photon}}};
    for (int j = 1; j <= n_spins; ++j)
        space.factors.push_back(Factor{"spin" + std::to_string(j), 2});
    return space;
}

Operator build_exact_spins_lab(const SystemParams& p, int n_spins, const Cutoffs& cut) {
    p.validate();
    cut.validate();
    SpaceLabel space = exact_spins_space(n_spins, cut.n_photon);
    Matrix a = fock_lower(cut.n_photon);
    Matrix ad = a.adjoint();
    double g_s = p.g_qs / std::sqrt(static_cast<double>(n_spins));

    // Flux basis at the degeneracy point: qubit splitting is transverse,
    // both couplings attach to sigma_z.
    Matrix h = 0.5 * p.omega_q * embed(space, {{"qubit", pauli(PauliKind::x)}}).matrix +
               p.omega_r * embed(space, {{"photon", Matrix(ad * a)}}).matrix +
               p.g_qr * embed(space, {{"qubit", pauli(PauliKind::z)}, {"photon", ad + a}}).matrix;
    for (int j = 1; j <= n_spins; ++j) {
        std::string name = "spin" + std::to_string(j);
        h += 0.5 * p.omega_s * embed(space, {{name, pauli(PauliKind::z)}}).matrix;
        h += g_s * embed(space, {{"qubit", pauli(PauliKind::z)}, {name, pauli(PauliKind::x)}}).matrix;
    }
    return Operator{space, std::move(h)};
}

Operator qubit_eigenbasis_rotation(const SpaceLabel& space) {
    Matrix had(2, 2);
    had << 1, 1, 1, -1;
    had /= std::numbers::sqrt2;
    return embed(space, {{"qubit", had}});
}

Operator build_exact_spins(const SystemParams& p, int n_spins, const Cutoffs& cut) {
    Operator lab = build_exact_spins_lab(p, n_spins, cut);
    Operator u = qubit_eigenbasis_rotation(lab.space);
    // The Hadamard is its own inverse: U H U swaps sigma_x and sigma_z.
    return Operator{lab.space, u.matrix * lab.matrix * u.matrix};
}

Operator build_hamiltonian(HamiltonianKind kind, const SystemParams& p,
                           const Cutoffs& cut, int n_spins) {
    switch (kind) {
    case HamiltonianKind::rabi_full: return build_rabi_full(p, cut);
    case HamiltonianKind::jaynes_cummings: return build_jc(p, cut);
    case HamiltonianKind::eff_strong: return build_eff_strong(p, cut);
    case HamiltonianKind::eff_ultra: return build_eff_ultra(p, cut);
    case HamiltonianKind::eff_squeezed: return build_eff_squeezed(p, cut);
    case HamiltonianKind::eff_mixed: return build_eff_mixed(p, cut);
    case HamiltonianKind::exact_spins: return build_exact_spins(p, n_spins, cut);
    }
    throw std::invalid_argument("build_hamiltonian: bad kind");
}

} // namespace fluxbus
