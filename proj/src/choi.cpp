#include "qnet/choi.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qnet {

DensityMatrix bell_phi_plus() {
    ComplexMatrix m(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return DensityMatrix::make(m);
}

DensityMatrix choi_matrix(const KrausChannel& channel) {
    if (channel.dim_in() != 2)
        throw std::domain_error("choi_matrix: only qubit-input channels are supported");
    if (channel.dim_out() != 2 && channel.dim_out() != 3)
        throw std::domain_error("choi_matrix: output dimension must be 2 or 3");
    const std::size_t dout = channel.dim_out();
    const std::size_t dim = 2 * dout;

    // (I (x) K)|phi+> for each Kraus operator, summed as projectors.
    ComplexMatrix sigma(dim, dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const ComplexMatrix& k : channel.ops()) {
        std::vector<cplx> v(dim, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t r = 0; r < dout; ++r)
                v[i * dout + r] = k(r, i) * inv_sqrt2;
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                sigma(a, b) += v[a] * std::conj(v[b]);
    }
    return DensityMatrix::make(sigma);
}

WeylCovarianceReport weyl_covariance(const KrausChannel& channel, double tolerance) {
    if (channel.dim_in() != 2 || channel.dim_out() != 2)
        throw std::domain_error("weyl_covariance: channel must map qubits to qubits");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("weyl_covariance: tolerance must be positive");

    const DensityMatrix sigma = choi_matrix(channel);
    WeylCovarianceReport report;
    report.covariant = true;
    for (int k = 0; k < 4; ++k) {
        const ComplexMatrix& u = pauli(k);
        std::vector<ComplexMatrix> conjugated;
        conjugated.reserve(channel.ops().size());
        for (const ComplexMatrix& op : channel.ops())
            conjugated.push_back(u.adjoint() * op * u);
        const DensityMatrix sigma_k =
            choi_matrix(KrausChannel::make(2, 2, std::move(conjugated)));
        const double residual = trace_norm(sigma_k.matrix() - sigma.matrix());
        report.residuals[static_cast<std::size_t>(k)] = residual;
        if (residual > tolerance) report.covariant = false;
    }
    return report;
}

} // namespace qnet
