#include "qnet/density.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qnet {

DensityMatrix DensityMatrix::make(const ComplexMatrix& m) {
    if (!m.square() || m.rows() == 0)
        throw std::domain_error("density matrix must be square and non-empty");
    if (!m.all_finite())
        throw std::domain_error("density matrix has non-finite entries");
    if (m.hermiticity_defect() > tol::herm) {
        std::ostringstream os;
        os << "density matrix is not Hermitian (defect " << m.hermiticity_defect() << ")";
        throw std::domain_error(os.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol::trace) {
        std::ostringstream os;
        os << "density matrix trace is " << tr << ", expected 1";
        throw std::domain_error(os.str());
    }
    EigenSystem es = hermitian_eigensystem(m);
    for (double v : es.values) {
        if (v < -tol::psd) {
            std::ostringstream os;
            os << "density matrix has negative eigenvalue " << v;
            throw std::domain_error(os.str());
        }
    }
    return DensityMatrix(m);
}

const ComplexMatrix& pauli(int k) {
    static const auto make_paulis = [] {
        std::array<ComplexMatrix, 4> p{ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                                       ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
        p[0](0, 0) = 1.0;
        p[0](1, 1) = 1.0;
        p[1](0, 1) = 1.0;
        p[1](1, 0) = 1.0;
        p[2](0, 1) = cplx(0.0, -1.0);
        p[2](1, 0) = cplx(0.0, 1.0);
        p[3](0, 0) = 1.0;
        p[3](1, 1) = -1.0;
        return p;
    };
    static const std::array<ComplexMatrix, 4> paulis = make_paulis();
    if (k < 0 || k > 3) throw std::invalid_argument("pauli index must be 0..3");
    return paulis[static_cast<std::size_t>(k)];
}

} // namespace qnet
