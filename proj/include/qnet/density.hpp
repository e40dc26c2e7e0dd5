#pragma once

#include "qnet/matrix.hpp"

#include <cstddef>

namespace qnet {

// Validation tolerances shared across the numerical core.
namespace tol {
constexpr double herm = 1e-9;   // Hermiticity defect
constexpr double trace = 1e-9;  // |Tr - 1|
constexpr double psd = 1e-9;    // eigenvalue floor, -psd allowed
constexpr double cptp = 1e-9;   // Kraus completeness defect
constexpr double supp = 1e-10;  // eigenvalue support threshold
} // namespace tol

// A quantum state: Hermitian, positive semidefinite, unit trace.
// Construction validates all three invariants and throws std::domain_error
// on violation, so a DensityMatrix value is always a valid state.
class DensityMatrix {
public:
    static DensityMatrix make(const ComplexMatrix& m);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

// The four single-qubit Pauli unitaries, index 0..3 = I, X, Y, Z.
const ComplexMatrix& pauli(int k);

} // namespace qnet
