// qalgebra.cpp — dense labelled-operator algebra.
#include "fluxbus/qalgebra.hpp"

#include "fluxbus/errors.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numeric>
#include <set>

namespace fluxbus {

// ---- space labels ----

int SpaceLabel::total_dim() const {
    int d = 1;
    for (const auto& f : factors) d *= f.dim;
    return d;
}

int SpaceLabel::factor_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(factors.size()); ++i)
        if (factors[i].name == name) return i;
    throw std::invalid_argument("no factor named '" + name + "' in space label");
}

bool SpaceLabel::operator==(const SpaceLabel& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].name != other.factors[i].name || factors[i].dim != other.factors[i].dim)
            return false;
    return true;
}

SpaceLabel qubit_photon_spin_space(int photon_dim, int spin_dim) {
    return SpaceLabel{{{"qubit", 2}, {"photon", photon_dim}, {"spin", spin_dim}}};
}

SpaceLabel photon_spin_space(int photon_dim, int spin_dim) {
    return SpaceLabel{{{"photon", photon_dim}, {"spin", spin_dim}}};
}

// ---- elementary operators ----

Matrix fock_lower(int dim) {
    if (dim < 2) throw std::invalid_argument("fock_lower: dim must be at least 2");
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix pauli(PauliKind kind) {
    Matrix m = Matrix::Zero(2, 2);
    switch (kind) {
    case PauliKind::x: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case PauliKind::y: m(0, 1) = Cplx(0, -1); m(1, 0) = Cplx(0, 1); break;
    case PauliKind::z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case PauliKind::plus: m(0, 1) = 1.0; break;
    case PauliKind::minus: m(1, 0) = 1.0; break;
    }
    return m;
}

Operator embed(const SpaceLabel& space,
               const std::vector<std::pair<std::string, Matrix>>& parts) {
    std::set<std::string> seen;
    for (const auto& [name, m] : parts) {
        int idx = space.factor_index(name); // throws if absent
        if (!seen.insert(name).second)
            throw std::invalid_argument("embed: factor '" + name + "' named twice");
        int d = space.factors[idx].dim;
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("embed: matrix for '" + name + "' is " +
                                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                        ", factor dim is " + std::to_string(d));
    }
    Matrix out = Matrix::Identity(1, 1);
    for (const auto& f : space.factors) {
        const Matrix* block = nullptr;
        for (const auto& [name, m] : parts)
            if (name == f.name) { block = &m; break; }
        Matrix next;
        if (block)
            next = Eigen::kroneckerProduct(out, *block).eval();
        else
            next = Eigen::kroneckerProduct(out, Matrix::Identity(f.dim, f.dim)).eval();
        out = std::move(next);
    }
    return Operator{space, std::move(out)};
}

StateVector basis_state(const SpaceLabel& space, const std::vector<int>& occ) {
    if (static_cast<int>(occ.size()) != static_cast<int>(space.factors.size()))
        throw std::invalid_argument("basis_state: need one occupation per factor");
    int index = 0;
    for (size_t i = 0; i < occ.size(); ++i) {
        int d = space.factors[i].dim;
        if (occ[i] < 0 || occ[i] >= d)
            throw std::invalid_argument("basis_state: occupation " + std::to_string(occ[i]) +
                                        " out of range for factor '" + space.factors[i].name + "'");
        index = index * d + occ[i];
    }
    Vector v = Vector::Zero(space.total_dim());
    v(index) = 1.0;
    return StateVector{space, std::move(v)};
}

// ---- composition ----

Operator commutator(const Operator& a, const Operator& b) {
    if (a.space != b.space)
        throw std::invalid_argument("commutator: operators live on different spaces");
    return Operator{a.space, a.matrix * b.matrix - b.matrix * a.matrix};
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("commutator: matrix shapes differ");
    return a * b - b * a;
}

// ---- spectral tools ----

Eigensystem eigensystem(const Operator& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigensystem: eigensolver did not converge");
    return Eigensystem{h.space, solver.eigenvalues(), solver.eigenvectors()};
}

Operator expm_hermitian(const Operator& h, double scale) {
    double norm = max_abs(h.matrix);
    double defect = max_abs(Matrix(h.matrix - h.matrix.adjoint()));
    if (defect > 1e-12 * std::max(norm, 1.0))
        throw numeric_error("expm_hermitian: input not hermitian (defect " +
                            std::to_string(defect) + ")");
    Eigensystem es = eigensystem(h);
    Vector phases(es.eigenvalues.size());
    for (int k = 0; k < es.eigenvalues.size(); ++k)
        phases(k) = std::exp(Cplx(0, scale * es.eigenvalues(k)));
    Matrix out = es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
    return Operator{h.space, std::move(out)};
}

Operator project_qubit_ground(const Operator& op, const std::string& qubit_name) {
    int q = op.space.factor_index(qubit_name);
    if (op.space.factors[q].dim != 2)
        throw std::invalid_argument("project_qubit_ground: factor '" + qubit_name +
                                    "' is not two-dimensional");
    // Strides: index = sum_i occ_i * stride_i with stride decreasing left to right.
    int n = static_cast<int>(op.space.factors.size());
    std::vector<int> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * op.space.factors[i + 1].dim;

    SpaceLabel reduced;
    for (int i = 0; i < n; ++i)
        if (i != q) reduced.factors.push_back(op.space.factors[i]);

    std::vector<int> keep;
    keep.reserve(reduced.total_dim());
    for (int idx = 0; idx < op.space.total_dim(); ++idx)
        if ((idx / stride[q]) % 2 == 1) keep.push_back(idx); // qubit index 1 = ground
    Matrix block = op.matrix(keep, keep);
    return Operator{std::move(reduced), std::move(block)};
}

// ---- misc ----

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::vector<int> interior_indices(const SpaceLabel& space, int excluded) {
    if (excluded < 0) throw std::invalid_argument("interior_indices: excluded must be >= 0");
    int n = static_cast<int>(space.factors.size());
    std::vector<int> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * space.factors[i + 1].dim;
    std::vector<int> keep;
    for (int idx = 0; idx < space.total_dim(); ++idx) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (space.factors[i].dim == 2) continue; // qubit-like factor: keep both levels
            int occ = (idx / stride[i]) % space.factors[i].dim;
            if (occ >= space.factors[i].dim - excluded) ok = false;
        }
        if (ok) keep.push_back(idx);
    }
    return keep;
}

double interior_max_abs(const Operator& op, int excluded) {
    std::vector<int> keep = interior_indices(op.space, excluded);
    if (keep.empty()) return 0.0;
    Matrix block = op.matrix(keep, keep);
    return max_abs(block);
}

} // namespace fluxbus
