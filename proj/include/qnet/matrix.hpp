#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qnet {

using cplx = std::complex<double>;

// Dense row-major complex matrix. The whole toolkit works on dimensions
// <= 6, so there is no attempt at sparsity or blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix scaled(cplx factor) const;

    cplx trace() const;
    // Largest |entry| deviation from the Hermitian transpose.
    double hermiticity_defect() const;
    // max_ij |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& other) const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Transpose the second tensor factor of a (dim_a * dim_b)-dimensional
// square matrix. Used for PPT checks on two-qubit states.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Converges to off-diagonal Frobenius norm <= 1e-12; intended for dim <= 6.
// Throws std::invalid_argument for non-square or non-Hermitian input.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

// Sum of |eigenvalue| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& hermitian);

} // namespace qnet
