#pragma once

#include "qnet/channel_catalog.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qnet {

struct Edge {
    std::size_t u = 0;  // node indices into QuantumNetwork::nodes
    std::size_t v = 0;
    ChannelDescriptor channel;
};

// Undirected multigraph with designated sender and receiver nodes.
// Immutable after parse/build; all queries are read-only.
struct QuantumNetwork {
    std::vector<std::string> nodes;     // document order, unique names
    std::vector<Edge> edges;            // parallel edges allowed, index = position
    std::vector<std::size_t> senders;   // node indices, nonempty
    std::vector<std::size_t> receivers; // node indices, nonempty, disjoint from senders

    std::size_t node_index(std::string_view name) const;  // throws if unknown
    bool is_sender(std::size_t node) const;
    bool is_receiver(std::size_t node) const;
    // Nodes that are neither senders nor receivers, in document order.
    std::vector<std::size_t> free_nodes() const;
};

bool operator==(const ChannelDescriptor& a, const ChannelDescriptor& b);
bool operator==(const Edge& a, const Edge& b);
bool operator==(const QuantumNetwork& a, const QuantumNetwork& b);

// Bipartition of the node set; in_a[i] tells whether node i sits on the
// sender side. Valid cuts keep every sender in A and every receiver in B.
struct Cut {
    std::vector<char> in_a;
};

struct CutWitness {
    Cut cut;
    std::vector<std::size_t> cut_set;  // edge indices, input order
    double flow_value = 0.0;           // +infinity allowed
};

struct Diagnostics {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// Parses and validates the network JSON document. Unknown fields are
// rejected; diagnostics carry JSON-path positions. Throws validation_error
// on any schema or invariant violation.
QuantumNetwork parse_network(std::string_view text);

// Parses one channel descriptor object (the "channel" grammar of the
// network schema). Throws validation_error.
ChannelDescriptor parse_channel_descriptor(std::string_view text);

// Canonical single-line JSON form; parse_network(serialize_network(n)) == n.
std::string serialize_network(const QuantumNetwork& net);

// Structural diagnostics: invariant violations as errors, connectivity and
// hygiene findings as warnings.
Diagnostics validate_network(const QuantumNetwork& net);

// True iff every sender is in A, every receiver in B, and sizes agree.
bool cut_is_valid(const QuantumNetwork& net, const Cut& cut);

// Edges with one endpoint on each side, in input edge order.
// Throws std::invalid_argument for a cut that does not fit the network.
std::vector<std::size_t> cut_set(const QuantumNetwork& net, const Cut& cut);

// Sum of edge REE weights over the cut set; +infinity saturates.
double multi_edge_ree_flow(const QuantumNetwork& net, const Cut& cut);

inline constexpr std::size_t kDefaultFreeNodeLimit = 22;

// Streams all 2^(free node count) valid cuts exactly once. Free nodes are
// assigned by a binary counter over masks, bit b steering free node b onto
// the sender side. Restartable by constructing a fresh enumerator.
class CutEnumerator {
public:
    explicit CutEnumerator(const QuantumNetwork& net,
                           std::size_t free_node_limit = kDefaultFreeNodeLimit);

    // Fills 'out' and advances; returns false when exhausted.
    bool next(Cut& out);

    std::uint64_t total() const { return total_; }
    const std::vector<std::size_t>& free_nodes() const { return free_; }

    // Cut for one specific counter value, without advancing shared state.
    Cut cut_for_mask(std::uint64_t mask) const;

private:
    const QuantumNetwork* net_;
    std::vector<std::size_t> free_;
    std::uint64_t total_ = 0;
    std::uint64_t next_mask_ = 0;
};

} // namespace qnet
