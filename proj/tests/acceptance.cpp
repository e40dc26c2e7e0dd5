// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime limits are pinned in the checks.

#include "qnet/bell.hpp"
#include "qnet/channel_catalog.hpp"
#include "qnet/choi.hpp"
#include "qnet/entropy.hpp"
#include "qnet/network.hpp"
#include "qnet/report_io.hpp"
#include "qnet/solver.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace qnet;
using qnet::testing::amplitude_damping;
using qnet::testing::random_density;
using qnet::testing::random_network;
using qnet::testing::random_pauli_channel;
using qnet::testing::random_spectrum;

namespace {

int g_failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int number, const char* title, bool pass, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", number, title,
                seconds);
    if (!pass) ++g_failures;
}

QuantumNetwork loss_network(const std::string& eta_literal) {
    return parse_network(
        R"({"nodes":["a","b"],"senders":["a"],"receivers":["b"],
            "edges":[{"u":"a","v":"b","channel":{"kind":"pure_loss","eta":)" +
        eta_literal + "}}]}");
}

std::array<double, 4> sorted_overlaps(const DensityMatrix& rho) {
    std::array<double, 4> s = bell_overlaps(rho);
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
}

// criterion 1: single pure-loss edges reproduce -log2(1-eta)
void criterion_plob() {
    Timer timer;
    bool ok = true;
    const std::pair<const char*, double> cases[] = {
        {"0.1", 0.15200309344504995}, {"0.5", 1.0}, {"0.9", 3.3219280948873626}};
    for (const auto& [eta, expected] : cases) {
        const BoundReport r = bound_auto(loss_network(eta));
        ok = ok && std::abs(r.bound - expected) <= 1e-9;
        ok = ok && std::abs(r.bound + std::log2(1.0 - std::stod(eta))) <= 1e-9;
    }
    const double t = timer.seconds();
    report(1, "PLOB single-edge reproduction", ok && t < 1.0, t);
}

// criterion 2: router bottleneck with three perfect fan-out edges
void criterion_router() {
    Timer timer;
    const QuantumNetwork net = parse_network(
        R"({"nodes":["a","r","b1","b2","b3"],"senders":["a"],"receivers":["b1","b2","b3"],
            "edges":[{"u":"a","v":"r","channel":{"kind":"pure_loss","eta":0.75}},
                     {"u":"r","v":"b1","channel":{"kind":"ideal"}},
                     {"u":"r","v":"b2","channel":{"kind":"ideal"}},
                     {"u":"r","v":"b3","channel":{"kind":"ideal"}}]})");
    const BoundReport r = bound_auto(net);
    bool ok = r.bound == 2.0;
    ok = ok && r.witness.cut_set == std::vector<std::size_t>{0};
    ok = ok && net.edges[0].u == net.node_index("a") && net.edges[0].v == net.node_index("r");
    const double t = timer.seconds();
    report(2, "router bottleneck (bound 2.0, cut {(a,r)})", ok && t < 1.0, t);
}

// criterion 3: brute force vs max flow on 200 random finite networks
void criterion_oracle_equivalence() {
    Timer timer;
    std::mt19937 rng(101);
    bool ok = true;
    for (int rep = 0; rep < 200; ++rep) {
        const QuantumNetwork net = random_network(rng);
        const BoundReport bf = bound_brute_force(net);
        const BoundReport mf = bound_max_flow(net);
        ok = ok && std::isfinite(bf.bound);
        ok = ok && std::abs(bf.bound - mf.bound) <= 1e-9;
        ok = ok && std::abs(bf.witness.flow_value - mf.witness.flow_value) <= 1e-9;
        ok = ok && cut_is_valid(net, bf.witness.cut) && cut_is_valid(net, mf.witness.cut);
    }
    const double t = timer.seconds();
    report(3, "oracle equivalence on 200 random networks", ok && t < 60.0, t);
}

// criterion 4: dephasing weights certified by the numeric REE oracle
void criterion_dv_certification() {
    Timer timer;
    bool ok = true;
    for (double p : {0.1, 0.25, 0.4}) {
        const ChannelDescriptor desc = ChannelDescriptor::make_dephasing(p);
        const double w = edge_weight(desc).value;
        ok = ok && std::abs(w - (1.0 - binary_entropy(p))) <= 1e-12;

        const BellDiagonalSpectrum spec =
            BellDiagonalSpectrum::make(sorted_overlaps(choi_matrix(kraus_of(desc))));
        ok = ok && std::abs(ree_numeric_oracle(spec) - w) <= 1e-4;

        const DensityMatrix rho = bell_diagonal_state(spec.lambdas());
        const DensityMatrix gamma = closest_separable_bell_diagonal(spec);
        ok = ok && std::abs(relative_entropy(rho, gamma) - w) <= 1e-9;
    }
    const double t = timer.seconds();
    report(4, "discrete-variable weight certification", ok && t < 10.0, t);
}

// criterion 5: erasure Choi against the block-separable candidate
void criterion_erasure_identity() {
    Timer timer;
    bool ok = true;
    for (double p : {0.3, 0.5}) {
        const DensityMatrix choi = choi_matrix(kraus_of(ChannelDescriptor::make_erasure(p)));
        const DensityMatrix gamma22 =
            closest_separable_bell_diagonal(BellDiagonalSpectrum::make({1.0, 0.0, 0.0, 0.0}));
        ComplexMatrix g(6, 6);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t c = 0; c < 2; ++c)
                    for (std::size_t d = 0; d < 2; ++d)
                        g(a * 3 + b, c * 3 + d) =
                            (1.0 - p) * gamma22.matrix()(a * 2 + b, c * 2 + d);
        g(2, 2) += p * 0.5;
        g(5, 5) += p * 0.5;
        const double s = relative_entropy(choi, DensityMatrix::make(g));
        ok = ok && std::abs(s - (1.0 - p)) <= 1e-9;
    }
    report(5, "erasure block identity", ok, timer.seconds());
}

// criterion 6: covariance checker on Pauli channels and amplitude damping
void criterion_weyl() {
    Timer timer;
    std::mt19937 rng(103);
    bool ok = true;
    for (int rep = 0; rep < 100; ++rep) {
        const WeylCovarianceReport r = weyl_covariance(random_pauli_channel(rng), 1e-9);
        ok = ok && r.covariant;
        for (double res : r.residuals) ok = ok && res <= 1e-9;
    }
    ok = ok && !weyl_covariance(amplitude_damping(0.5), 1e-9).covariant;
    const double t = timer.seconds();
    report(6, "Weyl covariance checks", ok && t < 5.0, t);
}

// criterion 7: continuity penalty formula
void criterion_continuity_formula() {
    Timer timer;
    bool ok = true;
    for (double log2d : {0.0, 1.0, 2.5, 10.0, 100.0}) {
        const FiniteSizePenalty p = finite_size_penalty({0.0, log2d, 5, std::nullopt});
        ok = ok && p.delta == 0.0 && p.per_use == 0.0;
    }
    ok = ok && std::abs(finite_size_penalty({0.5, 0.0, 1, std::nullopt}).delta - 2.0) <= 1e-12;

    struct Spot {
        double eps, alpha;
        std::uint64_t n;
    };
    for (const Spot& s : {Spot{0.01, 2.0, 1000000}, Spot{0.001, 0.5, 1000}, Spot{0.25, 3.0, 7}}) {
        const double h2 = -s.eps * std::log2(s.eps) - (1.0 - s.eps) * std::log2(1.0 - s.eps);
        const double expected = 4.0 * s.eps * s.alpha + 2.0 * h2 / static_cast<double>(s.n);
        const FiniteSizePenalty p = finite_size_penalty({s.eps, 0.0, s.n, s.alpha});
        ok = ok && std::abs(p.per_use - expected) <= 1e-12;
    }
    report(7, "continuity-term formula", ok, timer.seconds());
}

// criterion 8: bound monotone under weight raises and edge removals
void criterion_monotonicity() {
    Timer timer;
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> uni(0.01, 2.0);
    bool ok = true;
    for (int rep = 0; rep < 100; ++rep) {
        const QuantumNetwork net = random_network(rng);
        const double base = bound_auto(net).bound;

        std::uniform_int_distribution<std::size_t> pick(0, net.edges.size() - 1);
        const std::size_t idx = pick(rng);

        QuantumNetwork raised = net;
        const double old_w = edge_weight(net.edges[idx].channel).value;
        raised.edges[idx].channel = ChannelDescriptor::make_custom(old_w + uni(rng));
        ok = ok && bound_auto(raised).bound >= base - 1e-9;

        QuantumNetwork removed = net;
        removed.edges.erase(removed.edges.begin() + static_cast<long>(idx));
        ok = ok && bound_auto(removed).bound <= base + 1e-9;
    }
    report(8, "bound monotonicity on 100 random networks", ok, timer.seconds());
}

// criterion 9: relative-entropy property suite
void criterion_ree_properties() {
    Timer timer;
    std::mt19937 rng(109);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool ok = true;

    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t dim = 2 + rep % 3;
        const DensityMatrix rho = random_density(rng, dim);
        const DensityMatrix gamma = random_density(rng, dim);
        ok = ok && relative_entropy(rho, gamma) >= -1e-9;
        if (rep % 2) ok = ok && relative_entropy(rho, rho) <= 1e-9;
    }

    static const std::array<std::array<std::size_t, 4>, 4> perms{{
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    for (int rep = 0; rep < 300; ++rep) {
        const std::array<double, 4> l = random_spectrum(rng);
        const std::array<double, 4> q = random_spectrum(rng);
        std::array<double, 4> mixed{};
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t i = 0; i < 4; ++i) mixed[perms[k][i]] += q[k] * l[i];
        ok = ok && ree_bell_diagonal(BellDiagonalSpectrum::make(mixed)) <=
                       ree_bell_diagonal(BellDiagonalSpectrum::make(l)) + 1e-12;
    }

    for (int rep = 0; rep < 1000; ++rep) {
        const std::array<double, 4> a = random_spectrum(rng);
        const std::array<double, 4> b = random_spectrum(rng);
        double dist = 0.0;
        for (std::size_t i = 0; i < 4; ++i) dist += std::abs(a[i] - b[i]);
        const double scale = dist > 0.0 ? std::min(1.0, 0.1 / dist) * uni(rng) : 0.0;
        std::array<double, 4> c{};
        for (std::size_t i = 0; i < 4; ++i) c[i] = a[i] + scale * (b[i] - a[i]);

        double eps = 0.0;
        for (std::size_t i = 0; i < 4; ++i) eps += std::abs(a[i] - c[i]);
        const double lhs = std::abs(ree_bell_diagonal(BellDiagonalSpectrum::make(a)) -
                                    ree_bell_diagonal(BellDiagonalSpectrum::make(c)));
        const double h2 = eps > 0.0 && eps < 1.0
                              ? -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps)
                              : 0.0;
        ok = ok && lhs <= 4.0 * eps * 2.0 + 2.0 * h2 + 1e-9;
    }

    report(9, "relative-entropy property suite", ok, timer.seconds());
}

} // namespace

int main() {
    criterion_plob();
    criterion_router();
    criterion_oracle_equivalence();
    criterion_dv_certification();
    criterion_erasure_identity();
    criterion_weyl();
    criterion_continuity_formula();
    criterion_monotonicity();
    criterion_ree_properties();

    if (g_failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
