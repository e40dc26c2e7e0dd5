#include "qnet/solver.hpp"

#include "qnet/entropy.hpp"
#include "qnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <thread>

namespace qnet {

namespace {

constexpr double kFlowEps = 1e-12;  // residual threshold and value tie window
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<EdgeWeight> weight_table(const QuantumNetwork& net) {
    std::vector<EdgeWeight> table;
    table.reserve(net.edges.size());
    for (const Edge& e : net.edges) table.push_back(edge_weight(e.channel));
    return table;
}

bool all_distillable(const std::vector<EdgeWeight>& table) {
    for (const EdgeWeight& w : table)
        if (!w.distillable) return false;
    return !table.empty();
}

std::vector<std::string> sorted_side_names(const QuantumNetwork& net, const Cut& cut) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        if (cut.in_a[i]) names.push_back(net.nodes[i]);
    std::sort(names.begin(), names.end());
    return names;
}

double cut_value(const QuantumNetwork& net, const std::vector<EdgeWeight>& table,
                 const Cut& cut) {
    double sum = 0.0;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const Edge& e = net.edges[i];
        if (cut.in_a[e.u] != cut.in_a[e.v]) {
            sum += table[i].value;
            if (std::isinf(sum)) return kInf;
        }
    }
    return sum;
}

CutWitness make_witness(const QuantumNetwork& net, const std::vector<EdgeWeight>& table,
                        Cut cut) {
    CutWitness w;
    w.cut = std::move(cut);
    w.cut_set = cut_set(net, w.cut);
    double sum = 0.0;
    for (std::size_t idx : w.cut_set) sum += table[idx].value;
    w.flow_value = std::isinf(sum) ? kInf : sum;
    return w;
}

BoundReport finish_report(const QuantumNetwork& net, std::vector<EdgeWeight> table, Cut cut,
                          SolveMethod method, const SolveOptions& opts) {
    BoundReport report;
    report.witness = make_witness(net, table, std::move(cut));
    report.bound = report.witness.flow_value;
    report.method = method;
    report.distillable_network = all_distillable(table);
    report.per_edge_weights = std::move(table);
    report.tolerance = opts.tolerance;
    return report;
}

struct ScanBest {
    double value = kInf;
    std::uint64_t mask = 0;
    bool valid = false;
};

// Scans masks [begin, end) and keeps the minimum, breaking value ties by
// the smaller sorted-name side. Shared by the serial and parallel paths.
ScanBest scan_masks(const QuantumNetwork& net, const std::vector<EdgeWeight>& table,
                    const CutEnumerator& enumerator, std::uint64_t begin, std::uint64_t end) {
    ScanBest best;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Cut cut = enumerator.cut_for_mask(mask);
        const double value = cut_value(net, table, cut);
        if (!best.valid || value < best.value - kFlowEps) {
            best = {value, mask, true};
        } else if (std::abs(value - best.value) <= kFlowEps ||
                   (std::isinf(value) && std::isinf(best.value))) {
            const auto cand = sorted_side_names(net, cut);
            const auto incumbent = sorted_side_names(net, enumerator.cut_for_mask(best.mask));
            if (cand < incumbent) best = {value, mask, true};
        }
    }
    return best;
}

ScanBest pick_better(const QuantumNetwork& net, const CutEnumerator& enumerator,
                     const ScanBest& a, const ScanBest& b) {
    if (!a.valid) return b;
    if (!b.valid) return a;
    const bool tie = std::abs(a.value - b.value) <= kFlowEps ||
                     (std::isinf(a.value) && std::isinf(b.value));
    if (!tie) return a.value < b.value ? a : b;
    const auto na = sorted_side_names(net, enumerator.cut_for_mask(a.mask));
    const auto nb = sorted_side_names(net, enumerator.cut_for_mask(b.mask));
    return nb < na ? b : a;
}

// Paired-arc residual network: arc i and i^1 are mutual reverses.
class FlowGraph {
public:
    explicit FlowGraph(std::size_t n) : head_(n) {}

    void add_undirected(int u, int v, double cap) { add_pair(u, v, cap, cap); }
    void add_directed(int u, int v, double cap) { add_pair(u, v, cap, 0.0); }

    double max_flow(int s, int t) {
        double total = 0.0;
        while (bfs(s, t)) {
            iter_.assign(head_.size(), 0);
            for (;;) {
                const double pushed = dfs(s, t, kInf);
                if (pushed <= kFlowEps) break;
                total += pushed;
            }
        }
        return total;
    }

    // Nodes reachable from s through residual capacity > eps.
    std::vector<char> residual_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::deque<int> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int idx : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(idx)];
                if (a.cap > kFlowEps && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    queue.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        double cap;
    };

    void add_pair(int u, int v, double cap_uv, double cap_vu) {
        head_[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({v, cap_uv});
        head_[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({u, cap_vu});
    }

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::deque<int> queue{s};
        level_[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int idx : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(idx)];
                if (a.cap > kFlowEps && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] =
                        level_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    double dfs(int u, int t, double limit) {
        if (u == t) return limit;
        for (std::size_t& i = iter_[static_cast<std::size_t>(u)];
             i < head_[static_cast<std::size_t>(u)].size(); ++i) {
            const int idx = head_[static_cast<std::size_t>(u)][i];
            Arc& a = arcs_[static_cast<std::size_t>(idx)];
            if (a.cap <= kFlowEps ||
                level_[static_cast<std::size_t>(a.to)] !=
                    level_[static_cast<std::size_t>(u)] + 1)
                continue;
            const double pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > kFlowEps) {
                a.cap -= pushed;
                arcs_[static_cast<std::size_t>(idx ^ 1)].cap += pushed;
                return pushed;
            }
        }
        return 0.0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

void require_solvable(const QuantumNetwork& net) {
    Diagnostics diag = validate_network(net);
    if (!diag.ok()) {
        std::string msg = "network is invalid:";
        for (const std::string& e : diag.errors) msg += " " + e + ";";
        throw validation_error(msg);
    }
}

} // namespace

std::string to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::auto_select: return "auto";
        case SolveMethod::brute_force: return "brute_force";
        case SolveMethod::max_flow: return "max_flow";
    }
    return "unknown";
}

BoundReport bound_brute_force(const QuantumNetwork& net, const SolveOptions& opts) {
    require_solvable(net);
    const std::vector<EdgeWeight> table = weight_table(net);
    CutEnumerator enumerator(net, opts.free_node_limit);
    const std::uint64_t total = enumerator.total();

    const int jobs = std::max(1, opts.jobs);
    ScanBest best;
    if (jobs == 1 || total < 1024) {
        best = scan_masks(net, table, enumerator, 0, total);
    } else {
        const std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
        std::vector<ScanBest> partial(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                partial[w] = scan_masks(net, table, enumerator, begin, end);
            });
        }
        for (std::thread& th : pool) th.join();
        for (const ScanBest& p : partial) best = pick_better(net, enumerator, best, p);
    }

    return finish_report(net, table, enumerator.cut_for_mask(best.mask),
                         SolveMethod::brute_force, opts);
}

BoundReport bound_max_flow(const QuantumNetwork& net, const SolveOptions& opts) {
    require_solvable(net);
    const std::vector<EdgeWeight> table = weight_table(net);

    double finite_sum = 0.0;
    for (const EdgeWeight& w : table)
        if (std::isfinite(w.value)) finite_sum += w.value;
    // Cap for infinite edge weights; a min cut through a capped edge beats
    // no all-finite cut, so a capped witness means an infinite bound.
    const double cap_inf = finite_sum + 1.0;

    const std::size_t n = net.nodes.size();
    const int source = static_cast<int>(n);
    const int sink = static_cast<int>(n) + 1;
    FlowGraph graph(n + 2);
    double edge_cap_sum = 0.0;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const double cap = std::isfinite(table[i].value) ? table[i].value : cap_inf;
        edge_cap_sum += cap;
        graph.add_undirected(static_cast<int>(net.edges[i].u),
                             static_cast<int>(net.edges[i].v), cap);
    }
    // Super-terminal arcs must never saturate; total flow is bounded by the
    // sum of all edge capacities.
    const double terminal_cap = edge_cap_sum + 1.0;
    for (std::size_t s : net.senders) graph.add_directed(source, static_cast<int>(s), terminal_cap);
    for (std::size_t r : net.receivers) graph.add_directed(static_cast<int>(r), sink, terminal_cap);

    graph.max_flow(source, sink);

    const std::vector<char> reach = graph.residual_side(source);
    Cut cut;
    cut.in_a.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) cut.in_a[i] = reach[i];
    for (std::size_t s : net.senders) cut.in_a[s] = 1;  // re-expand the super terminal

    return finish_report(net, table, std::move(cut), SolveMethod::max_flow, opts);
}

BoundReport bound_auto(const QuantumNetwork& net, const SolveOptions& opts) {
    switch (opts.method) {
        case SolveMethod::brute_force: return bound_brute_force(net, opts);
        case SolveMethod::max_flow: return bound_max_flow(net, opts);
        case SolveMethod::auto_select: break;
    }
    if (net.free_nodes().size() <= 16) return bound_brute_force(net, opts);
    return bound_max_flow(net, opts);
}

std::vector<SenderBound> per_sender_bounds(const QuantumNetwork& net, const SolveOptions& opts) {
    require_solvable(net);
    std::vector<SenderBound> results;
    for (std::size_t sender : net.senders) {
        QuantumNetwork single = net;
        single.senders = {sender};
        results.push_back({net.nodes[sender], bound_auto(single, opts)});
    }
    return results;
}

FiniteSizePenalty finite_size_penalty(const FiniteSizeParams& params) {
    if (!(params.epsilon >= 0.0 && params.epsilon < 1.0))
        throw std::domain_error("finite_size_penalty: epsilon must lie in [0,1)");
    if (!(params.log2_dim >= 0.0))
        throw std::domain_error("finite_size_penalty: log2_dim must be >= 0");
    if (params.n == 0)
        throw std::domain_error("finite_size_penalty: n must be positive");
    if (params.alpha_n && !(*params.alpha_n >= 0.0))
        throw std::domain_error("finite_size_penalty: alpha_n must be >= 0");

    FiniteSizePenalty out;
    const double h = binary_entropy(params.epsilon);
    out.delta = 4.0 * params.epsilon * params.log2_dim + 2.0 * h;
    const double n = static_cast<double>(params.n);
    if (params.alpha_n)
        out.per_use = 4.0 * params.epsilon * (*params.alpha_n) + 2.0 * h / n;
    else
        out.per_use = out.delta / n;
    return out;
}

} // namespace qnet
