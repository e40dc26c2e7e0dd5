#pragma once

#include "qnet/density.hpp"

namespace qnet {

/// Binary Shannon entropy in bits, with 0*log 0 := 0.
/// Throws std::domain_error unless p is in [0,1].
double binary_entropy(double p);

/// Von Neumann entropy in bits, -sum e_i log2 e_i over the spectrum.
double vn_entropy(const DensityMatrix& rho);

/// Quantum relative entropy S(rho||gamma) in bits. Returns +infinity when
/// rho's support is not contained in gamma's (support decided by tol::supp).
/// Throws std::invalid_argument on dimension mismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& gamma);

} // namespace qnet
