#include "qnet/errors.hpp"
#include "qnet/network.hpp"
#include "qnet/report_io.hpp"
#include "qnet/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("cannot read '" + path + "'");
    return buf.str();
}

qnet::SolveMethod parse_method(const std::string& name) {
    if (name == "auto") return qnet::SolveMethod::auto_select;
    if (name == "brute") return qnet::SolveMethod::brute_force;
    if (name == "maxflow") return qnet::SolveMethod::max_flow;
    throw qnet::validation_error("unknown method '" + name + "'");
}

std::size_t free_node_limit_from_env() {
    const char* env = std::getenv("QNET_MAX_FREE_NODES");
    if (!env) return qnet::kDefaultFreeNodeLimit;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 62)
        throw qnet::validation_error("QNET_MAX_FREE_NODES must be an integer in [1,62]");
    return static_cast<std::size_t>(v);
}

qnet::QuantumNetwork load_network(const std::string& path) {
    const qnet::QuantumNetwork net = qnet::parse_network(read_file(path));
    for (const std::string& w : qnet::validate_network(net).warnings)
        std::cerr << "warning: " << w << "\n";
    return net;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conferencing-key rate bounds for quantum networks"};
    app.require_subcommand(1);

    std::string input_path;
    std::string method = "auto";
    std::string format = "text";
    double tolerance = 1e-9;
    int jobs = 1;
    bool per_sender_flag = false;
    bool with_bound = false;
    std::string channel_json;
    double epsilon = 0.0;
    double log2_dim = 0.0;
    double alpha_n = 0.0;
    std::uint64_t uses = 1;

    auto add_network_options = [&](CLI::App* cmd, bool with_method) {
        cmd->add_option("--input", input_path, "network JSON file")->required();
        if (with_method)
            cmd->add_option("--method", method, "auto|brute|maxflow")
                ->check(CLI::IsMember({"auto", "brute", "maxflow"}));
    };

    CLI::App* cmd_bound = app.add_subcommand("bound", "minimum multi-edge REE flow over cuts");
    add_network_options(cmd_bound, true);
    cmd_bound->add_flag("--per-sender", per_sender_flag, "also report per-sender bounds");

    CLI::App* cmd_weights = app.add_subcommand("weights", "per-edge REE weight table");
    add_network_options(cmd_weights, false);

    CLI::App* cmd_per_sender =
        app.add_subcommand("per-sender", "bound for each sender against all receivers");
    add_network_options(cmd_per_sender, true);

    CLI::App* cmd_cov =
        app.add_subcommand("check-covariance", "Pauli covariance check of a qubit channel");
    cmd_cov->add_option("--channel", channel_json, "channel JSON (descriptor or raw Kraus)");
    cmd_cov->add_option("--input", input_path, "file holding the channel JSON");

    CLI::App* cmd_fs = app.add_subcommand("finite-size", "weak-converse continuity penalty");
    cmd_fs->add_option("--epsilon", epsilon, "state closeness, in [0,1)")->required();
    cmd_fs->add_option("--log2-dim", log2_dim, "log2 of target state dimension");
    CLI::Option* alpha_opt = cmd_fs->add_option("--alpha-n", alpha_n, "dimension growth constant");
    cmd_fs->add_option("--n", uses, "number of network uses");

    CLI::App* cmd_dot = app.add_subcommand("export-dot", "annotated Graphviz export");
    add_network_options(cmd_dot, true);
    cmd_dot->add_flag("--with-bound", with_bound, "dash the minimizing cut-set edges");

    for (CLI::App* cmd : {cmd_bound, cmd_weights, cmd_per_sender, cmd_cov, cmd_fs, cmd_dot}) {
        cmd->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--tolerance", tolerance, "numeric tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "parallel enumeration workers")
            ->check(CLI::PositiveNumber);
    }

    CLI11_PARSE(app, argc, argv);
    const bool json = (format == "json");

    try {
        qnet::SolveOptions opts;
        opts.method = parse_method(method);
        opts.jobs = jobs;
        opts.tolerance = tolerance;
        opts.free_node_limit = free_node_limit_from_env();

        if (cmd_bound->parsed()) {
            const qnet::QuantumNetwork net = load_network(input_path);
            const qnet::BoundReport report = qnet::bound_auto(net, opts);
            std::cout << (json ? qnet::bound_report_json(net, report)
                               : qnet::bound_report_text(net, report));
            if (json) std::cout << "\n";
            if (per_sender_flag) {
                const auto bounds = qnet::per_sender_bounds(net, opts);
                std::cout << (json ? qnet::per_sender_json(net, bounds)
                                   : qnet::per_sender_text(net, bounds));
                if (json) std::cout << "\n";
            }
        } else if (cmd_weights->parsed()) {
            const qnet::QuantumNetwork net = load_network(input_path);
            std::vector<qnet::EdgeWeight> table;
            table.reserve(net.edges.size());
            for (const qnet::Edge& e : net.edges) table.push_back(qnet::edge_weight(e.channel));
            std::cout << (json ? qnet::weights_json(net, table) : qnet::weights_text(net, table));
            if (json) std::cout << "\n";
        } else if (cmd_per_sender->parsed()) {
            const qnet::QuantumNetwork net = load_network(input_path);
            const auto bounds = qnet::per_sender_bounds(net, opts);
            std::cout << (json ? qnet::per_sender_json(net, bounds)
                               : qnet::per_sender_text(net, bounds));
            if (json) std::cout << "\n";
        } else if (cmd_cov->parsed()) {
            if (channel_json.empty() && input_path.empty())
                throw qnet::validation_error("check-covariance needs --channel or --input");
            const std::string text = channel_json.empty() ? read_file(input_path) : channel_json;
            const qnet::KrausChannel channel = qnet::parse_kraus_channel_json(text);
            const qnet::WeylCovarianceReport report = qnet::weyl_covariance(channel, tolerance);
            std::cout << (json ? qnet::covariance_json(report, tolerance)
                               : qnet::covariance_text(report, tolerance));
            if (json) std::cout << "\n";
        } else if (cmd_fs->parsed()) {
            qnet::FiniteSizeParams params;
            params.epsilon = epsilon;
            params.log2_dim = log2_dim;
            params.n = uses;
            if (alpha_opt->count() > 0) params.alpha_n = alpha_n;
            const qnet::FiniteSizePenalty penalty = qnet::finite_size_penalty(params);
            std::cout << (json ? qnet::finite_size_json(params, penalty)
                               : qnet::finite_size_text(params, penalty));
            if (json) std::cout << "\n";
        } else if (cmd_dot->parsed()) {
            const qnet::QuantumNetwork net = load_network(input_path);
            std::optional<qnet::CutWitness> witness;
            if (with_bound) witness = qnet::bound_auto(net, opts).witness;
            std::cout << qnet::export_dot(net, witness);
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qnet::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const qnet::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const qnet::unsupported_kind_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
