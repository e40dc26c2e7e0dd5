#pragma once

#include "qnet/matrix.hpp"

#include <cstddef>
#include <vector>

namespace qnet {

// A completely positive trace-preserving map in Kraus form. Operators are
// dim_out x dim_in; construction checks sum_k K_k^dag K_k = I within
// tol::cptp and throws std::domain_error otherwise.
class KrausChannel {
public:
    static KrausChannel make(std::size_t dim_in, std::size_t dim_out,
                             std::vector<ComplexMatrix> ops);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix>& ops() const { return ops_; }

    // sum_k K rho K^dag
    ComplexMatrix apply(const ComplexMatrix& rho) const;

private:
    KrausChannel(std::size_t din, std::size_t dout, std::vector<ComplexMatrix> ops)
        : dim_in_(din), dim_out_(dout), ops_(std::move(ops)) {}
    std::size_t dim_in_;
    std::size_t dim_out_;
    std::vector<ComplexMatrix> ops_;
};

} // namespace qnet
