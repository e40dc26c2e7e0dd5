#include "qnet/network.hpp"

#include "qnet/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qnet {

using ordered_json = nlohmann::ordered_json;

std::size_t QuantumNetwork::node_index(std::string_view name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return i;
    throw std::invalid_argument("unknown node '" + std::string(name) + "'");
}

bool QuantumNetwork::is_sender(std::size_t node) const {
    return std::find(senders.begin(), senders.end(), node) != senders.end();
}

bool QuantumNetwork::is_receiver(std::size_t node) const {
    return std::find(receivers.begin(), receivers.end(), node) != receivers.end();
}

std::vector<std::size_t> QuantumNetwork::free_nodes() const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!is_sender(i) && !is_receiver(i)) free.push_back(i);
    return free;
}

bool operator==(const ChannelDescriptor& a, const ChannelDescriptor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ChannelKind::pure_loss: return a.eta == b.eta;
        case ChannelKind::qlim_amp: return a.gain == b.gain;
        case ChannelKind::dephasing:
        case ChannelKind::erasure: return a.p == b.p;
        case ChannelKind::pauli: return a.probs == b.probs;
        case ChannelKind::ideal: return true;
        case ChannelKind::custom: return a.weight == b.weight;
    }
    return false;
}

bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.channel == b.channel;
}

bool operator==(const QuantumNetwork& a, const QuantumNetwork& b) {
    return a.nodes == b.nodes && a.edges == b.edges && a.senders == b.senders &&
           a.receivers == b.receivers;
}

namespace {

double require_number(const ordered_json& obj, const std::string& key, const std::string& where,
                      std::vector<std::string>& errors) {
    if (!obj.contains(key)) {
        errors.push_back(where + ": missing field '" + key + "'");
        return 0.0;
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        errors.push_back(where + "." + key + ": expected a number");
        return 0.0;
    }
    return v.get<double>();
}

void reject_unknown_fields(const ordered_json& obj, const std::vector<std::string>& known,
                           const std::string& where, std::vector<std::string>& errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            errors.push_back(where + ": unknown field '" + it.key() + "'");
    }
}

ChannelDescriptor parse_channel(const ordered_json& ch, const std::string& where,
                                std::vector<std::string>& errors) {
    ChannelDescriptor desc = ChannelDescriptor::make_ideal();
    if (!ch.is_object()) {
        errors.push_back(where + ": expected an object");
        return desc;
    }
    if (!ch.contains("kind") || !ch.at("kind").is_string()) {
        errors.push_back(where + ": missing string field 'kind'");
        return desc;
    }
    const std::string kind = ch.at("kind").get<std::string>();
    if (kind == "pure_loss") {
        desc = ChannelDescriptor::make_pure_loss(require_number(ch, "eta", where, errors));
        reject_unknown_fields(ch, {"kind", "eta"}, where, errors);
    } else if (kind == "qlim_amp") {
        desc = ChannelDescriptor::make_qlim_amp(require_number(ch, "g", where, errors));
        reject_unknown_fields(ch, {"kind", "g"}, where, errors);
    } else if (kind == "dephasing") {
        desc = ChannelDescriptor::make_dephasing(require_number(ch, "p", where, errors));
        reject_unknown_fields(ch, {"kind", "p"}, where, errors);
    } else if (kind == "erasure") {
        desc = ChannelDescriptor::make_erasure(require_number(ch, "p", where, errors));
        reject_unknown_fields(ch, {"kind", "p"}, where, errors);
    } else if (kind == "pauli") {
        std::array<double, 4> probs{};
        if (!ch.contains("probs") || !ch.at("probs").is_array() || ch.at("probs").size() != 4) {
            errors.push_back(where + ": pauli channel needs a 4-element 'probs' array");
        } else {
            for (std::size_t i = 0; i < 4; ++i) {
                const auto& q = ch.at("probs").at(i);
                if (!q.is_number()) {
                    errors.push_back(where + ".probs[" + std::to_string(i) +
                                     "]: expected a number");
                } else {
                    probs[i] = q.get<double>();
                }
            }
        }
        desc = ChannelDescriptor::make_pauli(probs);
        reject_unknown_fields(ch, {"kind", "probs"}, where, errors);
    } else if (kind == "ideal") {
        desc = ChannelDescriptor::make_ideal();
        reject_unknown_fields(ch, {"kind"}, where, errors);
    } else if (kind == "custom") {
        desc = ChannelDescriptor::make_custom(require_number(ch, "w", where, errors));
        reject_unknown_fields(ch, {"kind", "w"}, where, errors);
    } else {
        errors.push_back(where + ": unknown channel kind '" + kind + "'");
        return desc;
    }
    for (const std::string& msg : validate(desc)) errors.push_back(where + ": " + msg);
    return desc;
}

[[noreturn]] void throw_diagnostics(const std::vector<std::string>& errors) {
    std::ostringstream os;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (i) os << "\n";
        os << errors[i];
    }
    throw validation_error(os.str());
}

} // namespace

QuantumNetwork parse_network(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }

    std::vector<std::string> errors;
    if (!doc.is_object()) throw validation_error("document root must be an object");
    reject_unknown_fields(doc, {"nodes", "senders", "receivers", "edges"}, "$", errors);

    QuantumNetwork net;
    std::unordered_map<std::string, std::size_t> index_of;

    for (const std::string key : {"nodes", "senders", "receivers", "edges"}) {
        if (!doc.contains(key)) errors.push_back("$: missing field '" + key + "'");
    }
    if (!errors.empty()) throw_diagnostics(errors);

    if (!doc.at("nodes").is_array()) errors.push_back("nodes: expected an array of strings");
    if (!doc.at("senders").is_array()) errors.push_back("senders: expected an array of strings");
    if (!doc.at("receivers").is_array())
        errors.push_back("receivers: expected an array of strings");
    if (!doc.at("edges").is_array()) errors.push_back("edges: expected an array of objects");
    if (!errors.empty()) throw_diagnostics(errors);

    const auto& nodes = doc.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes.at(i).is_string()) {
            errors.push_back("nodes[" + std::to_string(i) + "]: expected a string");
            continue;
        }
        const std::string name = nodes.at(i).get<std::string>();
        if (index_of.count(name)) {
            errors.push_back("nodes[" + std::to_string(i) + "]: node '" + name +
                             "' repeated in nodes list");
            continue;
        }
        index_of[name] = net.nodes.size();
        net.nodes.push_back(name);
    }

    auto parse_terminals = [&](const char* key, std::vector<std::size_t>& out) {
        const auto& arr = doc.at(key);
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
            if (!arr.at(i).is_string()) {
                errors.push_back(where + ": expected a string");
                continue;
            }
            const std::string name = arr.at(i).get<std::string>();
            if (!seen.insert(name).second) {
                errors.push_back(where + ": '" + name + "' listed twice");
                continue;
            }
            auto it = index_of.find(name);
            if (it == index_of.end()) {
                errors.push_back(where + ": '" + name + "' is not a declared node");
                continue;
            }
            out.push_back(it->second);
        }
    };
    parse_terminals("senders", net.senders);
    parse_terminals("receivers", net.receivers);

    const auto& edges = doc.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const auto& e = edges.at(i);
        if (!e.is_object()) {
            errors.push_back(where + ": expected an object");
            continue;
        }
        reject_unknown_fields(e, {"u", "v", "channel"}, where, errors);
        Edge edge;
        bool endpoints_ok = true;
        for (const char* key : {"u", "v"}) {
            if (!e.contains(key) || !e.at(key).is_string()) {
                errors.push_back(where + ": missing string field '" + std::string(key) + "'");
                endpoints_ok = false;
                continue;
            }
            const std::string name = e.at(key).get<std::string>();
            auto it = index_of.find(name);
            if (it == index_of.end()) {
                errors.push_back(where + "." + key + ": '" + name + "' is not a declared node");
                endpoints_ok = false;
                continue;
            }
            (std::string(key) == "u" ? edge.u : edge.v) = it->second;
        }
        if (endpoints_ok && edge.u == edge.v)
            errors.push_back(where + ": self-loops are not allowed");
        if (!e.contains("channel")) {
            errors.push_back(where + ": missing field 'channel'");
        } else {
            edge.channel = parse_channel(e.at("channel"), where + ".channel", errors);
        }
        if (endpoints_ok) net.edges.push_back(edge);
    }

    if (!errors.empty()) throw_diagnostics(errors);

    Diagnostics diag = validate_network(net);
    if (!diag.ok()) throw_diagnostics(diag.errors);
    return net;
}

ChannelDescriptor parse_channel_descriptor(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    std::vector<std::string> errors;
    ChannelDescriptor desc = parse_channel(doc, "channel", errors);
    if (!errors.empty()) throw_diagnostics(errors);
    return desc;
}

std::string serialize_network(const QuantumNetwork& net) {
    ordered_json doc;
    doc["nodes"] = net.nodes;
    ordered_json senders = ordered_json::array();
    for (std::size_t s : net.senders) senders.push_back(net.nodes[s]);
    doc["senders"] = std::move(senders);
    ordered_json receivers = ordered_json::array();
    for (std::size_t r : net.receivers) receivers.push_back(net.nodes[r]);
    doc["receivers"] = std::move(receivers);

    ordered_json edges = ordered_json::array();
    for (const Edge& e : net.edges) {
        ordered_json je;
        je["u"] = net.nodes[e.u];
        je["v"] = net.nodes[e.v];
        ordered_json ch;
        ch["kind"] = to_string(e.channel.kind);
        switch (e.channel.kind) {
            case ChannelKind::pure_loss: ch["eta"] = e.channel.eta; break;
            case ChannelKind::qlim_amp: ch["g"] = e.channel.gain; break;
            case ChannelKind::dephasing:
            case ChannelKind::erasure: ch["p"] = e.channel.p; break;
            case ChannelKind::pauli: ch["probs"] = e.channel.probs; break;
            case ChannelKind::ideal: break;
            case ChannelKind::custom: ch["w"] = e.channel.weight; break;
        }
        je["channel"] = std::move(ch);
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    return doc.dump();
}

Diagnostics validate_network(const QuantumNetwork& net) {
    Diagnostics diag;

    if (net.nodes.empty()) diag.errors.push_back("network has no nodes");
    {
        std::unordered_set<std::string> seen;
        for (const std::string& n : net.nodes)
            if (!seen.insert(n).second)
                diag.errors.push_back("node '" + n + "' repeated in nodes list");
    }
    if (net.senders.empty()) diag.errors.push_back("at least one sender is required");
    if (net.receivers.empty()) diag.errors.push_back("at least one receiver is required");
    for (std::size_t s : net.senders)
        if (net.is_receiver(s))
            diag.errors.push_back("senders and receivers must be disjoint ('" + net.nodes[s] +
                                  "' appears in both)");
    for (const Edge& e : net.edges) {
        if (e.u >= net.nodes.size() || e.v >= net.nodes.size())
            diag.errors.push_back("edge endpoint index out of range");
        else if (e.u == e.v)
            diag.errors.push_back("self-loop at node '" + net.nodes[e.u] + "'");
        for (const std::string& msg : validate(e.channel))
            diag.errors.push_back("edge " + net.nodes[e.u] + "--" + net.nodes[e.v] + ": " + msg);
    }
    if (!diag.errors.empty()) return diag;

    // Connectivity from the sender set.
    std::vector<char> reach(net.nodes.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t s : net.senders) {
        reach[s] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const Edge& e : net.edges) {
            if (e.u == u && !reach[e.v]) {
                reach[e.v] = 1;
                queue.push_back(e.v);
            } else if (e.v == u && !reach[e.u]) {
                reach[e.u] = 1;
                queue.push_back(e.u);
            }
        }
    }
    bool any_reachable = false;
    for (std::size_t r : net.receivers) {
        if (reach[r]) {
            any_reachable = true;
        } else {
            diag.warnings.push_back("receiver '" + net.nodes[r] +
                                    "' is unreachable from every sender");
        }
    }
    if (!any_reachable)
        diag.warnings.push_back("no receiver is reachable from any sender; bound is trivially zero");

    std::vector<std::size_t> degree(net.nodes.size(), 0);
    for (const Edge& e : net.edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        if (degree[i] == 0)
            diag.warnings.push_back("node '" + net.nodes[i] + "' is isolated");

    return diag;
}

bool cut_is_valid(const QuantumNetwork& net, const Cut& cut) {
    if (cut.in_a.size() != net.nodes.size()) return false;
    for (std::size_t s : net.senders)
        if (!cut.in_a[s]) return false;
    for (std::size_t r : net.receivers)
        if (cut.in_a[r]) return false;
    return true;
}

std::vector<std::size_t> cut_set(const QuantumNetwork& net, const Cut& cut) {
    if (!cut_is_valid(net, cut))
        throw std::invalid_argument("cut does not form a sender|receiver bipartition of this network");
    std::vector<std::size_t> edges;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const Edge& e = net.edges[i];
        if (cut.in_a[e.u] != cut.in_a[e.v]) edges.push_back(i);
    }
    return edges;
}

double multi_edge_ree_flow(const QuantumNetwork& net, const Cut& cut) {
    double sum = 0.0;
    for (std::size_t idx : cut_set(net, cut)) {
        sum += edge_weight(net.edges[idx].channel).value;
        if (std::isinf(sum)) return std::numeric_limits<double>::infinity();
    }
    return sum;
}

CutEnumerator::CutEnumerator(const QuantumNetwork& net, std::size_t free_node_limit)
    : net_(&net), free_(net.free_nodes()) {
    if (free_.size() > free_node_limit) {
        std::ostringstream os;
        os << "cut enumeration over " << free_.size() << " free nodes exceeds the limit of "
           << free_node_limit << "; use the max-flow method instead";
        throw capacity_error(os.str());
    }
    total_ = std::uint64_t(1) << free_.size();
}

Cut CutEnumerator::cut_for_mask(std::uint64_t mask) const {
    Cut cut;
    cut.in_a.assign(net_->nodes.size(), 0);
    for (std::size_t s : net_->senders) cut.in_a[s] = 1;
    for (std::size_t b = 0; b < free_.size(); ++b)
        if (mask & (std::uint64_t(1) << b)) cut.in_a[free_[b]] = 1;
    return cut;
}

bool CutEnumerator::next(Cut& out) {
    if (next_mask_ >= total_) return false;
    out = cut_for_mask(next_mask_);
    ++next_mask_;
    return true;
}

} // namespace qnet
