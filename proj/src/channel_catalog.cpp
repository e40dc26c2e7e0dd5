#include "qnet/channel_catalog.hpp"

#include "qnet/bell.hpp"
#include "qnet/density.hpp"
#include "qnet/entropy.hpp"
#include "qnet/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qnet {

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::pure_loss: return "pure_loss";
        case ChannelKind::qlim_amp: return "qlim_amp";
        case ChannelKind::dephasing: return "dephasing";
        case ChannelKind::erasure: return "erasure";
        case ChannelKind::pauli: return "pauli";
        case ChannelKind::ideal: return "ideal";
        case ChannelKind::custom: return "custom";
    }
    return "unknown";
}

std::string to_string(WeightProvenance p) {
    switch (p) {
        case WeightProvenance::closed_form_paper: return "closed_form_paper";
        case WeightProvenance::closed_form_literature: return "closed_form_literature";
        case WeightProvenance::custom: return "custom";
    }
    return "unknown";
}

ChannelDescriptor ChannelDescriptor::make_pure_loss(double eta) {
    ChannelDescriptor d;
    d.kind = ChannelKind::pure_loss;
    d.eta = eta;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_qlim_amp(double gain) {
    ChannelDescriptor d;
    d.kind = ChannelKind::qlim_amp;
    d.gain = gain;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_dephasing(double p) {
    ChannelDescriptor d;
    d.kind = ChannelKind::dephasing;
    d.p = p;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_erasure(double p) {
    ChannelDescriptor d;
    d.kind = ChannelKind::erasure;
    d.p = p;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_pauli(const std::array<double, 4>& probs) {
    ChannelDescriptor d;
    d.kind = ChannelKind::pauli;
    d.probs = probs;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_ideal() {
    ChannelDescriptor d;
    d.kind = ChannelKind::ideal;
    return d;
}

ChannelDescriptor ChannelDescriptor::make_custom(double weight) {
    ChannelDescriptor d;
    d.kind = ChannelKind::custom;
    d.weight = weight;
    return d;
}

std::vector<std::string> validate(const ChannelDescriptor& desc) {
    std::vector<std::string> errors;
    switch (desc.kind) {
        case ChannelKind::pure_loss:
            if (!(desc.eta > 0.0 && desc.eta < 1.0))
                errors.push_back("eta must lie in (0,1)");
            break;
        case ChannelKind::qlim_amp:
            if (!(desc.gain > 1.0)) errors.push_back("gain must exceed 1");
            if (!std::isfinite(desc.gain)) errors.push_back("gain must be finite");
            break;
        case ChannelKind::dephasing:
        case ChannelKind::erasure:
            if (!(desc.p >= 0.0 && desc.p <= 1.0))
                errors.push_back("p must lie in [0,1]");
            break;
        case ChannelKind::pauli: {
            double sum = 0.0;
            bool in_range = true;
            for (double q : desc.probs) {
                if (!(q >= 0.0 && q <= 1.0)) in_range = false;
                sum += q;
            }
            if (!in_range) errors.push_back("probabilities must lie in [0,1]");
            if (std::abs(sum - 1.0) > 1e-9) errors.push_back("probabilities must sum to 1");
            break;
        }
        case ChannelKind::ideal:
            break;
        case ChannelKind::custom:
            if (!(desc.weight >= 0.0)) errors.push_back("weight must be >= 0");
            if (std::isnan(desc.weight)) errors.push_back("weight must not be NaN");
            break;
    }
    return errors;
}

EdgeWeight edge_weight(const ChannelDescriptor& desc) {
    const std::vector<std::string> errors = validate(desc);
    if (!errors.empty()) {
        std::ostringstream os;
        os << "invalid " << to_string(desc.kind) << " descriptor:";
        for (const std::string& e : errors) os << " " << e << ";";
        throw std::domain_error(os.str());
    }

    EdgeWeight w;
    switch (desc.kind) {
        case ChannelKind::pure_loss:
            w.value = -std::log2(1.0 - desc.eta);
            w.distillable = true;
            w.provenance = WeightProvenance::closed_form_paper;
            break;
        case ChannelKind::qlim_amp:
            w.value = -std::log2(1.0 - 1.0 / desc.gain);
            w.distillable = true;
            w.provenance = WeightProvenance::closed_form_literature;
            break;
        case ChannelKind::dephasing:
            w.value = 1.0 - binary_entropy(std::min(desc.p, 1.0 - desc.p));
            w.distillable = true;
            w.provenance = WeightProvenance::closed_form_literature;
            break;
        case ChannelKind::erasure:
            w.value = 1.0 - desc.p;
            w.distillable = true;
            w.provenance = WeightProvenance::closed_form_literature;
            break;
        case ChannelKind::pauli:
            w.value = ree_bell_diagonal(BellDiagonalSpectrum::make(desc.probs));
            w.distillable = false;
            w.provenance = WeightProvenance::closed_form_literature;
            break;
        case ChannelKind::ideal:
            w.value = std::numeric_limits<double>::infinity();
            w.distillable = false;
            w.provenance = WeightProvenance::closed_form_paper;
            break;
        case ChannelKind::custom:
            w.value = desc.weight;
            w.distillable = false;
            w.provenance = WeightProvenance::custom;
            break;
    }
    return w;
}

KrausChannel kraus_of(const ChannelDescriptor& desc) {
    const std::vector<std::string> errors = validate(desc);
    if (!errors.empty()) {
        std::ostringstream os;
        os << "invalid " << to_string(desc.kind) << " descriptor:";
        for (const std::string& e : errors) os << " " << e << ";";
        throw std::domain_error(os.str());
    }

    switch (desc.kind) {
        case ChannelKind::ideal: {
            std::vector<ComplexMatrix> ops{ComplexMatrix::identity(2)};
            return KrausChannel::make(2, 2, std::move(ops));
        }
        case ChannelKind::dephasing: {
            std::vector<ComplexMatrix> ops{pauli(0).scaled(std::sqrt(1.0 - desc.p)),
                                           pauli(3).scaled(std::sqrt(desc.p))};
            return KrausChannel::make(2, 2, std::move(ops));
        }
        case ChannelKind::pauli: {
            std::vector<ComplexMatrix> ops;
            for (int k = 0; k < 4; ++k) {
                const double q = desc.probs[static_cast<std::size_t>(k)];
                if (q > 0.0) ops.push_back(pauli(k).scaled(std::sqrt(q)));
            }
            if (ops.empty()) ops.push_back(pauli(0));
            return KrausChannel::make(2, 2, std::move(ops));
        }
        case ChannelKind::erasure: {
            // Qubit in, qutrit out: the input survives in the {0,1} block
            // with amplitude sqrt(1-p); the erasure flag |e> = |2> absorbs
            // the rest.
            ComplexMatrix keep(3, 2);
            keep(0, 0) = std::sqrt(1.0 - desc.p);
            keep(1, 1) = std::sqrt(1.0 - desc.p);
            ComplexMatrix flag0(3, 2);
            flag0(2, 0) = std::sqrt(desc.p);
            ComplexMatrix flag1(3, 2);
            flag1(2, 1) = std::sqrt(desc.p);
            std::vector<ComplexMatrix> ops{keep, flag0, flag1};
            return KrausChannel::make(2, 3, std::move(ops));
        }
        case ChannelKind::pure_loss:
        case ChannelKind::qlim_amp:
        case ChannelKind::custom:
            throw unsupported_kind_error("kraus_of: no Kraus realization for kind '" +
                                         to_string(desc.kind) + "'");
    }
    throw unsupported_kind_error("kraus_of: unknown channel kind");
}

} // namespace qnet
