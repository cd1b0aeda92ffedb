// kernels.hpp — time-grid propagation kernels, serial and OpenMP-parallel.
//
// Everything here works on a fixed eigendecomposition: with H = U diag(w) U'
// and overlap vectors c0 = U' psi0, ct = U' target, the fidelity at time t is
// |sum_k conj(ct_k) exp(-i w_k t) c0_k|^2, an O(d) reduction per sample.  The
// parallel kernel splits the time grid across threads; each sample's
// reduction stays sequential, so serial and parallel results are bitwise
// identical.  The serial kernel is the reference the benchmark and the tests
// compare against.
#pragma once

#include "fluxbus/qalgebra.hpp"

#include <vector>

namespace fluxbus {

// |<target| exp(-iHt) |psi0>|^2 over the time grid.
std::vector<double> fidelity_series_serial(const Eigensystem& es, const StateVector& psi0,
                                           const StateVector& target,
                                           const std::vector<double>& times);

// Same contract, OpenMP over time samples (falls back to serial without OpenMP).
std::vector<double> fidelity_series_parallel(const Eigensystem& es, const StateVector& psi0,
                                             const StateVector& target,
                                             const std::vector<double>& times);

// Norm and energy expectation along the trajectory, for conservation checks;
// reconstructs psi(t) in the original basis and applies H directly, so the
// measured drift reflects the propagator's actual numerical error.
struct ConservationSeries {
    std::vector<double> norms;    // ||psi(t)||
    std::vector<double> energies; // Re <psi(t)|H|psi(t)>
};

ConservationSeries conservation_series(const Operator& h, const Eigensystem& es,
                                       const StateVector& psi0,
                                       const std::vector<double>& times);

// True when the library was compiled with OpenMP.
bool kernels_have_openmp();

} // namespace fluxbus
