#include "qnet/kraus.hpp"

#include "qnet/density.hpp"

#include <sstream>
#include <stdexcept>

namespace qnet {

KrausChannel KrausChannel::make(std::size_t dim_in, std::size_t dim_out,
                                std::vector<ComplexMatrix> ops) {
    if (dim_in == 0 || dim_out == 0 || ops.empty())
        throw std::domain_error("Kraus channel needs positive dimensions and at least one operator");
    for (const ComplexMatrix& k : ops) {
        if (k.rows() != dim_out || k.cols() != dim_in)
            throw std::domain_error("Kraus operator shape must be dim_out x dim_in");
        if (!k.all_finite())
            throw std::domain_error("Kraus operator has non-finite entries");
    }
    ComplexMatrix sum(dim_in, dim_in);
    for (const ComplexMatrix& k : ops) sum = sum + k.adjoint() * k;
    const double defect = sum.max_abs_diff(ComplexMatrix::identity(dim_in));
    if (defect > tol::cptp) {
        std::ostringstream os;
        os << "Kraus set is not trace preserving (completeness defect " << defect << ")";
        throw std::domain_error(os.str());
    }
    return KrausChannel(dim_in, dim_out, std::move(ops));
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_in_ || rho.cols() != dim_in_)
        throw std::invalid_argument("apply: state dimension mismatch");
    ComplexMatrix out(dim_out_, dim_out_);
    for (const ComplexMatrix& k : ops_) out = out + k * rho * k.adjoint();
    return out;
}

} // namespace qnet
