#pragma once

#include "qnet/density.hpp"
#include "qnet/kraus.hpp"

#include <array>

namespace qnet {

// Maximally entangled two-qubit state (|00> + |11>)(<00| + <11|)/2.
DensityMatrix bell_phi_plus();

// Choi matrix of a qubit-input channel: send half of the maximally
// entangled pair through the channel. Reference qubit is the first tensor
// factor, channel output the second; result dimension is 2 * dim_out.
DensityMatrix choi_matrix(const KrausChannel& channel);

struct WeylCovarianceReport {
    bool covariant = false;
    // Trace-norm distance between the Choi matrix of U_k^dag E(U_k . U_k^dag) U_k
    // and the Choi matrix of E, for k = I, X, Y, Z.
    std::array<double, 4> residuals{};
};

// Checks covariance of a qubit channel under conjugation by each Pauli,
// with the output correction fixed to the same Pauli.
WeylCovarianceReport weyl_covariance(const KrausChannel& channel, double tolerance);

} // namespace qnet
