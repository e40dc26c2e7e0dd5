#pragma once

#include "qnet/kraus.hpp"

#include <array>
#include <string>
#include <vector>

namespace qnet {

enum class ChannelKind { pure_loss, qlim_amp, dephasing, erasure, pauli, ideal, custom };

std::string to_string(ChannelKind kind);

// Edge channel model. Which parameter is meaningful depends on the kind:
// pure_loss uses eta, qlim_amp uses gain, dephasing/erasure use p, pauli
// uses probs, custom uses weight.
struct ChannelDescriptor {
    ChannelKind kind = ChannelKind::ideal;
    double eta = 0.0;
    double gain = 0.0;
    double p = 0.0;
    std::array<double, 4> probs{};
    double weight = 0.0;

    static ChannelDescriptor make_pure_loss(double eta);
    static ChannelDescriptor make_qlim_amp(double gain);
    static ChannelDescriptor make_dephasing(double p);
    static ChannelDescriptor make_erasure(double p);
    static ChannelDescriptor make_pauli(const std::array<double, 4>& probs);
    static ChannelDescriptor make_ideal();
    static ChannelDescriptor make_custom(double weight);
};

enum class WeightProvenance { closed_form_paper, closed_form_literature, custom };

std::string to_string(WeightProvenance p);

// REE weight of a single edge, in bits per network use. +infinity marks a
// perfect channel.
struct EdgeWeight {
    double value = 0.0;
    bool distillable = false;
    WeightProvenance provenance = WeightProvenance::custom;
};

// Parameter-range check; problems are returned, not thrown.
std::vector<std::string> validate(const ChannelDescriptor& desc);

// REE weight of the channel's resource state. Throws std::domain_error on
// an invalid descriptor.
EdgeWeight edge_weight(const ChannelDescriptor& desc);

// Kraus realization for the discrete-variable kinds, enabling independent
// verification through the Choi/REE pipeline. Continuous-variable kinds
// (pure_loss, qlim_amp) and custom weights have none and raise
// unsupported_kind_error.
KrausChannel kraus_of(const ChannelDescriptor& desc);

} // namespace qnet
