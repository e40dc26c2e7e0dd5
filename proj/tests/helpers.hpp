#pragma once

#include "qnet/bell.hpp"
#include "qnet/density.hpp"
#include "qnet/kraus.hpp"
#include "qnet/network.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qnet::testing {

inline std::array<double, 4> random_spectrum(std::mt19937& rng) {
    std::exponential_distribution<double> ex(1.0);
    std::array<double, 4> l{};
    double sum = 0.0;
    for (double& x : l) {
        x = ex(rng) + 1e-12;
        sum += x;
    }
    for (double& x : l) x /= sum;
    return l;
}

// Spectrum with a dominant weight >= 1/2, as sorted order expects.
inline std::array<double, 4> random_entangled_spectrum(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::array<double, 4> l{};
    l[0] = 0.5 + 0.5 * uni(rng) * 0.999;
    double rest = 1.0 - l[0];
    const double a = uni(rng);
    const double b = uni(rng) * (1.0 - a);
    l[1] = rest * a;
    l[2] = rest * b;
    l[3] = rest - l[1] - l[2];
    if (l[3] < 0.0) l[3] = 0.0;
    return l;
}

inline DensityMatrix random_density(std::mt19937& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            g(i, j) = cplx(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    return DensityMatrix::make(rho.scaled(1.0 / tr));
}

inline KrausChannel random_pauli_channel(std::mt19937& rng) {
    const std::array<double, 4> p = random_spectrum(rng);
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 4; ++k)
        ops.push_back(pauli(k).scaled(std::sqrt(p[static_cast<std::size_t>(k)])));
    return KrausChannel::make(2, 2, std::move(ops));
}

inline KrausChannel amplitude_damping(double gamma) {
    ComplexMatrix k0(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix k1(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return KrausChannel::make(2, 2, {k0, k1});
}

inline ChannelDescriptor random_finite_channel(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    switch (kind(rng)) {
        case 0: return ChannelDescriptor::make_pure_loss(0.05 + 0.9 * uni(rng));
        case 1: return ChannelDescriptor::make_qlim_amp(1.1 + 7.0 * uni(rng));
        case 2: return ChannelDescriptor::make_dephasing(uni(rng));
        case 3: return ChannelDescriptor::make_erasure(uni(rng));
        case 4: return ChannelDescriptor::make_pauli(random_spectrum(rng));
        default: return ChannelDescriptor::make_custom(2.5 * uni(rng));
    }
}

// Random multigraph with finite edge weights, up to 12 nodes / 30 edges.
inline QuantumNetwork random_network(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> node_count(2, 12);
    const std::size_t n = node_count(rng);

    QuantumNetwork net;
    for (std::size_t i = 0; i < n; ++i) net.nodes.push_back("n" + std::to_string(i));

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::uniform_int_distribution<std::size_t> sender_count(1, std::min<std::size_t>(3, n - 1));
    const std::size_t ns = sender_count(rng);
    std::uniform_int_distribution<std::size_t> receiver_count(1, std::min<std::size_t>(3, n - ns));
    const std::size_t nr = receiver_count(rng);
    net.senders.assign(order.begin(), order.begin() + static_cast<long>(ns));
    net.receivers.assign(order.begin() + static_cast<long>(ns),
                         order.begin() + static_cast<long>(ns + nr));

    std::uniform_int_distribution<std::size_t> edge_count(1, 30);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t m = edge_count(rng);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t u = pick(rng);
        std::size_t v = pick(rng);
        if (u == v) v = (v + 1) % n;
        net.edges.push_back({u, v, random_finite_channel(rng)});
    }
    return net;
}

} // namespace qnet::testing
