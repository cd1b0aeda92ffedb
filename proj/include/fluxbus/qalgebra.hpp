// qalgebra.hpp — dense operator algebra on labelled tensor-product spaces.
//
// Every operator and state carries a SpaceLabel naming the tensor factors in
// Kronecker order (leftmost factor is the slowest index).  Qubit factors use
// the ordering (excited, ground): basis index 0 is the excited state.  All
// matrices are dense; the Hilbert spaces in play stay small enough (a few
// thousand dimensions) that sparse storage would only add bookkeeping.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace fluxbus {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// ---- space labels ----

struct Factor {
    std::string name;
    int dim = 0;
};

// Ordered list of tensor factors.  Equality is name-and-dimension equality in
// order; operators may only be combined when their labels agree exactly.
struct SpaceLabel {
    std::vector<Factor> factors;

    int total_dim() const;
    // Index of the named factor; throws std::invalid_argument if absent.
    int factor_index(const std::string& name) const;
    bool operator==(const SpaceLabel& other) const;
    bool operator!=(const SpaceLabel& other) const { return !(*this == other); }
};

// Common layouts.  Kron order is qubit (.) photon (.) spin, qubit slowest.
SpaceLabel qubit_photon_spin_space(int photon_dim, int spin_dim);
SpaceLabel photon_spin_space(int photon_dim, int spin_dim);

struct Operator {
    SpaceLabel space;
    Matrix matrix;
};

struct StateVector {
    SpaceLabel space;
    Vector amplitudes;
};

// ---- elementary operators ----

// Lowering operator a on a Fock space truncated to `dim` levels
// (a|n> = sqrt(n)|n-1>).  Throws std::invalid_argument for dim < 2.
Matrix fock_lower(int dim);

enum class PauliKind { x, y, z, plus, minus };

// 2x2 Pauli matrices in the (excited, ground) ordering, so
// sigma_z = diag(+1, -1) and sigma_plus maps ground to excited.
Matrix pauli(PauliKind kind);

// Embed single-factor matrices into the full product space.  `parts` pairs a
// factor name with the matrix acting on it; unnamed factors get identities.
// Each matrix must be square with the named factor's dimension, and a factor
// may appear at most once.
Operator embed(const SpaceLabel& space,
               const std::vector<std::pair<std::string, Matrix>>& parts);

// Basis state |occ[0], occ[1], ...> with one occupation index per factor.
StateVector basis_state(const SpaceLabel& space, const std::vector<int>& occ);

// ---- composition ----

// [A, B] = AB - BA; labels must match.
Operator commutator(const Operator& a, const Operator& b);
Matrix commutator(const Matrix& a, const Matrix& b);

// ---- spectral tools ----

// Eigendecomposition of a hermitian operator.  Kept around so repeated
// propagation reuses one factorisation.
struct Eigensystem {
    SpaceLabel space;
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors; // columns
};

Eigensystem eigensystem(const Operator& h);

// exp(scale * i * H) for hermitian H via the spectral theorem.  Rejects
// visibly non-hermitian input (max |H - H^dag| > 1e-12 * max |H|).
Operator expm_hermitian(const Operator& h, double scale);

// Restriction of an operator to the qubit-ground block: keeps only rows and
// columns whose qubit index is 1 (ground) and drops the qubit factor from the
// label.  The qubit factor may sit at any position.
Operator project_qubit_ground(const Operator& op, const std::string& qubit_name = "qubit");

// ---- misc ----

double max_abs(const Matrix& m);

// Indices of the product space whose occupation stays below factor_dim -
// excluded for every non-qubit factor (qubit factors keep both levels).
// Used to measure norms away from the truncation edge.
std::vector<int> interior_indices(const SpaceLabel& space, int excluded);

// Max-norm of an operator over interior rows and columns only.
double interior_max_abs(const Operator& op, int excluded);

} // namespace fluxbus
