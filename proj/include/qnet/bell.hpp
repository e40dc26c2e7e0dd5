#pragma once

#include "qnet/density.hpp"

#include <array>

namespace qnet {

// Eigenvalues of a Bell-diagonal two-qubit state, stored descending.
// make() accepts the four weights in any order, validates them as a
// probability vector and sorts; throws std::domain_error otherwise.
class BellDiagonalSpectrum {
public:
    static BellDiagonalSpectrum make(const std::array<double, 4>& lambdas);

    const std::array<double, 4>& lambdas() const { return lambdas_; }
    double lambda_max() const { return lambdas_[0]; }

private:
    explicit BellDiagonalSpectrum(const std::array<double, 4>& l) : lambdas_(l) {}
    std::array<double, 4> lambdas_;
};

// Bell basis vector k as a 4-dim column, k = 0..3 ordered
// (|00>+|11>)/sqrt2, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2, (|00>-|11>)/sqrt2.
ComplexMatrix bell_vector(int k);

// sum_k weights[k] |B_k><B_k| in the computational basis. Weights need not
// be sorted; pairing with basis vectors is positional.
DensityMatrix bell_diagonal_state(const std::array<double, 4>& weights);

// <B_k|rho|B_k> for k = 0..3 of a 4-dimensional state.
std::array<double, 4> bell_overlaps(const DensityMatrix& rho);

// Positive partial transpose test on a dim_a (x) dim_b state.
bool is_ppt(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, double tolerance);

/// Relative entropy of entanglement of a Bell-diagonal state:
/// 1 - H2(lambda_max) when lambda_max >= 1/2, else 0.
double ree_bell_diagonal(const BellDiagonalSpectrum& spec);

/// The separable Bell-diagonal state gamma* attaining ree_bell_diagonal:
/// weights (1/2, l2/(2(1-l1)), l3/(2(1-l1)), l4/(2(1-l1))) against the
/// sorted spectrum. For lambda_max < 1/2 the state itself is returned.
DensityMatrix closest_separable_bell_diagonal(const BellDiagonalSpectrum& spec);

/// Upper bound on the REE by direct minimization of S(rho||gamma) over
/// Bell-diagonal gamma with gamma's largest weight <= 1/2 (dense simplex
/// grid followed by local pair-transfer refinement). Independent of the
/// closed form above; used as its in-repo oracle.
double ree_numeric_oracle(const BellDiagonalSpectrum& spec);

} // namespace qnet
