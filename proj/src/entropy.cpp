#include "qnet/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qnet {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("binary_entropy: argument must lie in [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double vn_entropy(const DensityMatrix& rho) {
    EigenSystem es = hermitian_eigensystem(rho.matrix());
    double h = 0.0;
    for (double e : es.values) {
        if (e < -tol::psd)
            throw std::domain_error("vn_entropy: state is not positive semidefinite");
        if (e > tol::supp) h -= e * std::log2(e);
    }
    return h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& gamma) {
    if (rho.dim() != gamma.dim())
        throw std::invalid_argument("relative_entropy: dimension mismatch");

    // Tr rho log2 rho from rho's spectrum.
    double tr_rho_log_rho = 0.0;
    {
        EigenSystem es = hermitian_eigensystem(rho.matrix());
        for (double e : es.values)
            if (e > tol::supp) tr_rho_log_rho += e * std::log2(e);
    }

    // Tr rho log2 gamma in gamma's eigenbasis; rho weight on a null
    // eigenvector of gamma means unbounded divergence.
    EigenSystem eg = hermitian_eigensystem(gamma.matrix());
    const std::size_t n = gamma.dim();
    double tr_rho_log_gamma = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        // <v_k| rho |v_k>
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            cplx row(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) row += rho.matrix()(i, j) * eg.vectors(j, k);
            acc += std::conj(eg.vectors(i, k)) * row;
        }
        const double weight = acc.real();
        if (eg.values[k] > tol::supp) {
            tr_rho_log_gamma += weight * std::log2(eg.values[k]);
        } else if (weight > tol::supp) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return tr_rho_log_rho - tr_rho_log_gamma;
}

} // namespace qnet
