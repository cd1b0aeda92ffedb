// kernels.cpp — propagation kernels.
#include "fluxbus/kernels.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fluxbus {

namespace {

void check_spaces(const Eigensystem& es, const StateVector& psi0, const StateVector& target) {
    if (psi0.space != es.space || target.space != es.space)
        throw std::invalid_argument("fidelity series: state and eigensystem spaces differ");
}

double fidelity_at(const Vector& c0, const Vector& ct, const Eigen::VectorXd& w, double t) {
    Cplx amp(0, 0);
    for (int k = 0; k < w.size(); ++k)
        amp += std::conj(ct(k)) * std::exp(Cplx(0, -w(k) * t)) * c0(k);
    return std::norm(amp);
}

} // namespace

std::vector<double> fidelity_series_serial(const Eigensystem& es, const StateVector& psi0,
                                           const StateVector& target,
                                           const std::vector<double>& times) {
    check_spaces(es, psi0, target);
    Vector c0 = es.eigenvectors.adjoint() * psi0.amplitudes;
    Vector ct = es.eigenvectors.adjoint() * target.amplitudes;
    std::vector<double> out(times.size());
    for (size_t i = 0; i < times.size(); ++i)
        out[i] = fidelity_at(c0, ct, es.eigenvalues, times[i]);
    return out;
}

std::vector<double> fidelity_series_parallel(const Eigensystem& es, const StateVector& psi0,
                                             const StateVector& target,
                                             const std::vector<double>& times) {
    check_spaces(es, psi0, target);
    Vector c0 = es.eigenvectors.adjoint() * psi0.amplitudes;
    Vector ct = es.eigenvectors.adjoint() * target.amplitudes;
    std::vector<double> out(times.size());
    const long n = static_cast<long>(times.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long i = 0; i < n; ++i)
        out[i] = fidelity_at(c0, ct, es.eigenvalues, times[i]);
    return out;
}

ConservationSeries conservation_series(const Operator& h, const Eigensystem& es,
                                       const StateVector& psi0,
                                       const std::vector<double>& times) {
    if (psi0.space != es.space || h.space != es.space)
        throw std::invalid_argument("conservation_series: operator, state and eigensystem spaces differ");
    Vector c0 = es.eigenvectors.adjoint() * psi0.amplitudes;
    ConservationSeries out;
    out.norms.resize(times.size());
    out.energies.resize(times.size());
    const long n = static_cast<long>(times.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long i = 0; i < n; ++i) {
        Vector phases(c0.size());
        for (int k = 0; k < c0.size(); ++k)
            phases(k) = std::exp(Cplx(0, -es.eigenvalues(k) * times[i])) * c0(k);
        Vector psi = es.eigenvectors * phases;
        out.norms[i] = psi.norm();
        out.energies[i] = psi.dot(h.matrix * psi).real();
    }
    return out;
}

bool kernels_have_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace fluxbus
