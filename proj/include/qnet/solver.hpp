#pragma once

#include "qnet/network.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qnet {

enum class SolveMethod { auto_select, brute_force, max_flow };

std::string to_string(SolveMethod m);

struct SolveOptions {
    SolveMethod method = SolveMethod::auto_select;
    std::size_t free_node_limit = kDefaultFreeNodeLimit;
    int jobs = 1;             // parallel brute-force enumeration workers
    double tolerance = 1e-9;  // recorded in the report
};

// Result of minimizing the multi-edge REE flow over all sender|receiver
// cuts. The bound caps the sum of all conferencing-key rates; when every
// edge is a distillable channel it equally caps the multi-edge secret-key
// capacity of the minimizing cut.
struct BoundReport {
    double bound = 0.0;
    CutWitness witness;
    SolveMethod method = SolveMethod::brute_force;
    std::vector<EdgeWeight> per_edge_weights;  // aligned with network edges
    double tolerance = 1e-9;
    bool distillable_network = false;
};

// Exact minimum by exhaustive cut enumeration. Ties resolve to the
// lexicographically smallest sender side as a sorted node-name list.
// Throws capacity_error beyond the free-node limit.
BoundReport bound_brute_force(const QuantumNetwork& net, const SolveOptions& opts = {});

// Same minimum via super-terminal max-flow/min-cut (Dinic). Infinite edge
// weights are capped at (sum of finite weights) + 1 during the search; a
// witness cut that still crosses a capped edge reports an infinite bound.
BoundReport bound_max_flow(const QuantumNetwork& net, const SolveOptions& opts = {});

// Brute force up to 16 free nodes, max-flow beyond.
BoundReport bound_auto(const QuantumNetwork& net, const SolveOptions& opts = {});

struct SenderBound {
    std::string sender;
    BoundReport report;
};

// Bound for each sender alone against the full receiver set, with the
// remaining senders treated as intermediate nodes.
std::vector<SenderBound> per_sender_bounds(const QuantumNetwork& net,
                                           const SolveOptions& opts = {});

struct FiniteSizeParams {
    double epsilon = 0.0;             // closeness of the output state
    double log2_dim = 0.0;            // log2 of the target state dimension
    std::uint64_t n = 1;              // network uses
    std::optional<double> alpha_n;    // growth constant when dim <= 2^(alpha_n * n)
};

struct FiniteSizePenalty {
    double delta = 0.0;    // 4 eps log2(dim) + 2 H2(eps)
    double per_use = 0.0;  // 4 eps alpha_n + 2 H2(eps)/n, or delta/n
};

// Weak-converse continuity penalty. Throws std::domain_error for
// parameters outside their ranges.
FiniteSizePenalty finite_size_penalty(const FiniteSizeParams& params);

} // namespace qnet
