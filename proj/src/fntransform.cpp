// fntransform.cpp — generators, residuals, numeric effective Hamiltonians.
#include "fluxbus/fntransform.hpp"

#include "fluxbus/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fluxbus {

std::string to_string(FnRegime regime) {
    switch (regime) {
    case FnRegime::rwa: return "rwa";
    case FnRegime::nonrwa: return "nonrwa";
    case FnRegime::mixed: return "mixed";
    }
    throw std::invalid_argument("to_string: bad FnRegime");
}

HamiltonianParts build_parts(const SystemParams& p, const Cutoffs& cut, FnRegime regime) {
    p.validate();
    cut.validate();
    SpaceLabel space = qubit_photon_spin_space(cut.n_photon, cut.n_spinmode);
    Matrix a = fock_lower(cut.n_photon);
    Matrix ad = a.adjoint();
    Matrix s = fock_lower(cut.n_spinmode);
    Matrix sd = s.adjoint();

    Matrix h0 = 0.5 * p.omega_q * embed(space, {{"qubit", pauli(PauliKind::z)}}).matrix +
                p.omega_r * embed(space, {{"photon", Matrix(ad * a)}}).matrix +
                p.omega_s * embed(space, {{"spin", Matrix(sd * s)}}).matrix;

    Matrix rot_r = embed(space, {{"qubit", pauli(PauliKind::plus)}, {"photon", a}}).matrix +
                   embed(space, {{"qubit", pauli(PauliKind::minus)}, {"photon", ad}}).matrix;
    Matrix rot_s = embed(space, {{"qubit", pauli(PauliKind::plus)}, {"spin", s}}).matrix +
                   embed(space, {{"qubit", pauli(PauliKind::minus)}, {"spin", sd}}).matrix;
    Matrix crot_r = embed(space, {{"qubit", pauli(PauliKind::plus)}, {"photon", ad}}).matrix +
                    embed(space, {{"qubit", pauli(PauliKind::minus)}, {"photon", a}}).matrix;
    Matrix crot_s = embed(space, {{"qubit", pauli(PauliKind::plus)}, {"spin", sd}}).matrix +
                    embed(space, {{"qubit", pauli(PauliKind::minus)}, {"spin", s}}).matrix;

    Matrix hi;
    switch (regime) {
    case FnRegime::rwa:
        hi = p.g_qr * rot_r + p.g_qs * rot_s;
        break;
    case FnRegime::nonrwa:
        hi = p.g_qr * (rot_r + crot_r) + p.g_qs * (rot_s + crot_s);
        break;
    case FnRegime::mixed:
        hi = p.g_qr * (rot_r + crot_r) + p.g_qs * rot_s;
        break;
    }
    return HamiltonianParts{Operator{space, std::move(h0)}, Operator{space, std::move(hi)}};
}

Generator build_generator(const SystemParams& p, const Cutoffs& cut, FnRegime regime) {
    p.validate();
    cut.validate();
    if (!(p.delta_r() > 0.0) || !(p.delta_s() > 0.0))
        throw std::domain_error("build_generator: dispersive regime requires positive detunings");
    SpaceLabel space = qubit_photon_spin_space(cut.n_photon, cut.n_spinmode);
    Matrix a = fock_lower(cut.n_photon);
    Matrix ad = a.adjoint();
    Matrix s = fock_lower(cut.n_spinmode);
    Matrix sd = s.adjoint();
    const Matrix sp = pauli(PauliKind::plus);
    const Matrix sm = pauli(PauliKind::minus);

    auto term = [&](const Matrix& q1, const char* f, const Matrix& m1,
                    const Matrix& q2, const Matrix& m2) {
        return Matrix(embed(space, {{"qubit", q1}, {f, m1}}).matrix -
                      embed(space, {{"qubit", q2}, {f, m2}}).matrix);
    };

    Generator gen;
    gen.regime = regime;
    gen.xi_r = p.g_qr / p.delta_r();
    gen.xi_s = p.g_qs / p.delta_s();
    Matrix v = gen.xi_r * term(sm, "photon", ad, sp, a) +
               gen.xi_s * term(sm, "spin", sd, sp, s);
    if (regime == FnRegime::nonrwa || regime == FnRegime::mixed) {
        gen.zeta_r = p.g_qr / p.eta_r();
        v += gen.zeta_r * term(sm, "photon", a, sp, ad);
    }
    if (regime == FnRegime::nonrwa) {
        gen.zeta_s = p.g_qs / p.eta_s();
        v += gen.zeta_s * term(sm, "spin", s, sp, sd);
    }
    gen.v = Operator{space, std::move(v)};
    return gen;
}

double generator_residual(const Operator& h0, const Operator& hi, const Generator& gen,
                          int excluded_levels) {
    if (h0.space != hi.space || h0.space != gen.v.space)
        throw std::invalid_argument("generator_residual: operators live on different spaces");
    Operator residual{h0.space, hi.matrix + commutator(h0, gen.v).matrix};
    if (excluded_levels == 0) return max_abs(residual.matrix);
    return interior_max_abs(residual, excluded_levels);
}

Operator numeric_effective(const Operator& h0, const Operator& hi, const Generator& gen,
                           double tolerance) {
    double residual = generator_residual(h0, hi, gen, 2);
    double scale = max_abs(hi.matrix);
    if (residual > tolerance * (scale > 0.0 ? scale : 1.0)) {
        std::ostringstream msg;
        msg << "numeric_effective: boundary-excluded residual " << residual
            << " exceeds tolerance " << tolerance << " * " << (scale > 0.0 ? scale : 1.0)
            << "; generator does not cancel H_I";
        throw numeric_error(msg.str());
    }
    Operator second{h0.space, h0.matrix + 0.5 * commutator(hi, gen.v).matrix};
    Operator projected = project_qubit_ground(second);
    // Remove the qubit-ground vacuum energy (free -omega_q/2 plus the Lamb
    // shift constant) so zero coupling returns the bare photon+spin model.
    Cplx vacuum = projected.matrix(0, 0);
    projected.matrix -= vacuum * Matrix::Identity(projected.matrix.rows(), projected.matrix.cols());
    return projected;
}

ExactEffective exact_unitary_effective(const Operator& h, const Generator& gen) {
    if (h.space != gen.v.space)
        throw std::invalid_argument("exact_unitary_effective: operator and generator spaces differ");
    // V is anti-Hermitian, so V = iK with K Hermitian and exp(+-V) = exp(+-iK).
    Operator k{h.space, Cplx(0, -1) * gen.v.matrix};
    Operator u_plus = expm_hermitian(k, 1.0);
    Operator u_minus = expm_hermitian(k, -1.0);
    Operator full{h.space, u_minus.matrix * h.matrix * u_plus.matrix};

    int q = h.space.factor_index("qubit");
    int n = static_cast<int>(h.space.factors.size());
    std::vector<int> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * h.space.factors[i + 1].dim;
    std::vector<int> excited, ground;
    for (int idx = 0; idx < h.space.total_dim(); ++idx)
        ((idx / stride[q]) % 2 == 0 ? excited : ground).push_back(idx);
    Matrix cross = full.matrix(excited, ground);

    ExactEffective out;
    out.dropped_block_norm = max_abs(cross);
    out.projected = project_qubit_ground(full);
    out.full = std::move(full);
    return out;
}

} // namespace fluxbus
