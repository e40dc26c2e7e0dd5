#include "qnet/report_io.hpp"

#include "qnet/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qnet {

namespace {

constexpr int kJsonDigits = 12;
constexpr int kTextDigits = 4;

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Number token for JSON: bare literal, or the string "inf".
std::string json_number(double v) {
    if (std::isinf(v)) return "\"inf\"";
    return format_number(v, kJsonDigits);
}

std::string quoted(const std::string& s) { return "\"" + escape_json(s) + "\""; }

std::vector<std::string> param_values(const ChannelDescriptor& d, int digits) {
    switch (d.kind) {
        case ChannelKind::pure_loss: return {format_number(d.eta, digits)};
        case ChannelKind::qlim_amp: return {format_number(d.gain, digits)};
        case ChannelKind::dephasing:
        case ChannelKind::erasure: return {format_number(d.p, digits)};
        case ChannelKind::pauli:
            return {format_number(d.probs[0], digits), format_number(d.probs[1], digits),
                    format_number(d.probs[2], digits), format_number(d.probs[3], digits)};
        case ChannelKind::ideal: return {};
        case ChannelKind::custom: return {format_number(d.weight, digits)};
    }
    return {};
}

std::string params_json(const ChannelDescriptor& d) {
    std::ostringstream os;
    os << "{";
    switch (d.kind) {
        case ChannelKind::pure_loss: os << "\"eta\":" << json_number(d.eta); break;
        case ChannelKind::qlim_amp: os << "\"g\":" << json_number(d.gain); break;
        case ChannelKind::dephasing:
        case ChannelKind::erasure: os << "\"p\":" << json_number(d.p); break;
        case ChannelKind::pauli:
            os << "\"probs\":[" << json_number(d.probs[0]) << "," << json_number(d.probs[1])
               << "," << json_number(d.probs[2]) << "," << json_number(d.probs[3]) << "]";
            break;
        case ChannelKind::ideal: break;
        case ChannelKind::custom: os << "\"w\":" << json_number(d.weight); break;
    }
    os << "}";
    return os.str();
}

std::string params_text(const ChannelDescriptor& d, int digits) {
    const std::vector<std::string> vals = param_values(d, digits);
    std::string out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += vals[i];
    }
    return out;
}

std::vector<std::string> witness_side_names(const QuantumNetwork& net, const CutWitness& w) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        if (w.cut.in_a[i]) names.push_back(net.nodes[i]);
    std::sort(names.begin(), names.end());
    return names;
}

std::string witness_json(const QuantumNetwork& net, const CutWitness& w) {
    std::ostringstream os;
    os << "{\"side_a\":[";
    const std::vector<std::string> names = witness_side_names(net, w);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ",";
        os << quoted(names[i]);
    }
    os << "],\"cut_set\":[";
    for (std::size_t i = 0; i < w.cut_set.size(); ++i) {
        const std::size_t idx = w.cut_set[i];
        const Edge& e = net.edges[idx];
        if (i) os << ",";
        os << "{\"u\":" << quoted(net.nodes[e.u]) << ",\"v\":" << quoted(net.nodes[e.v])
           << ",\"index\":" << idx << ",\"weight\":" << json_number(edge_weight(e.channel).value)
           << "}";
    }
    os << "],\"flow_value\":" << json_number(w.flow_value) << "}";
    return os.str();
}

std::string weight_rows_json(const QuantumNetwork& net, const std::vector<EdgeWeight>& table) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Edge& e = net.edges[i];
        if (i) os << ",";
        os << "{\"index\":" << i << ",\"u\":" << quoted(net.nodes[e.u])
           << ",\"v\":" << quoted(net.nodes[e.v]) << ",\"kind\":" << quoted(to_string(e.channel.kind))
           << ",\"params\":" << params_json(e.channel) << ",\"weight\":" << json_number(table[i].value)
           << ",\"distillable\":" << (table[i].distillable ? "true" : "false")
           << ",\"provenance\":" << quoted(to_string(table[i].provenance)) << "}";
    }
    os << "]";
    return os.str();
}

void weight_rows_text(std::ostringstream& os, const QuantumNetwork& net,
                      const std::vector<EdgeWeight>& table) {
    os << "index  u--v  kind  params  weight  distillable  provenance\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Edge& e = net.edges[i];
        os << i << "  " << net.nodes[e.u] << "--" << net.nodes[e.v] << "  "
           << to_string(e.channel.kind) << "  " << params_text(e.channel, kTextDigits) << "  "
           << format_number(table[i].value, kTextDigits) << "  "
           << (table[i].distillable ? "yes" : "no") << "  " << to_string(table[i].provenance)
           << "\n";
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

std::string format_number(double value, int significant_digits) {
    if (std::isinf(value)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

std::string bound_report_json(const QuantumNetwork& net, const BoundReport& report) {
    std::ostringstream os;
    os << "{\"bound\":" << json_number(report.bound) << ",\"method\":"
       << quoted(to_string(report.method)) << ",\"witness\":" << witness_json(net, report.witness)
       << ",\"distillable_network\":" << (report.distillable_network ? "true" : "false")
       << ",\"per_edge_weights\":" << weight_rows_json(net, report.per_edge_weights)
       << ",\"tolerance\":" << json_number(report.tolerance) << "}";
    return os.str();
}

std::string bound_report_text(const QuantumNetwork& net, const BoundReport& report) {
    std::ostringstream os;
    os << "bound: " << format_number(report.bound, kTextDigits) << " bits per network use\n";
    os << "method: " << to_string(report.method) << "\n";
    os << "distillable_network: " << (report.distillable_network ? "yes" : "no") << "\n";
    os << "witness side_a: " << join(witness_side_names(net, report.witness), " ") << "\n";
    os << "witness cut_set:\n";
    for (std::size_t idx : report.witness.cut_set) {
        const Edge& e = net.edges[idx];
        os << "  [" << idx << "] " << net.nodes[e.u] << "--" << net.nodes[e.v] << "  "
           << to_string(e.channel.kind) << "(" << params_text(e.channel, kTextDigits) << ")  w="
           << format_number(report.per_edge_weights[idx].value, kTextDigits) << "\n";
    }
    os << "flow_value: " << format_number(report.witness.flow_value, kTextDigits) << "\n";
    return os.str();
}

std::string weights_json(const QuantumNetwork& net, const std::vector<EdgeWeight>& table) {
    std::ostringstream os;
    os << "{\"per_edge_weights\":" << weight_rows_json(net, table) << "}";
    return os.str();
}

std::string weights_text(const QuantumNetwork& net, const std::vector<EdgeWeight>& table) {
    std::ostringstream os;
    weight_rows_text(os, net, table);
    return os.str();
}

std::string per_sender_json(const QuantumNetwork& net, const std::vector<SenderBound>& bounds) {
    std::ostringstream os;
    os << "{\"per_sender\":[";
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (i) os << ",";
        os << "{\"sender\":" << quoted(bounds[i].sender)
           << ",\"bound\":" << json_number(bounds[i].report.bound)
           << ",\"method\":" << quoted(to_string(bounds[i].report.method))
           << ",\"witness\":" << witness_json(net, bounds[i].report.witness) << "}";
    }
    os << "]}";
    return os.str();
}

std::string per_sender_text(const QuantumNetwork& net, const std::vector<SenderBound>& bounds) {
    std::ostringstream os;
    for (const SenderBound& sb : bounds) {
        os << "sender " << sb.sender << ": bound "
           << format_number(sb.report.bound, kTextDigits) << " via "
           << join(witness_side_names(net, sb.report.witness), " ") << "\n";
    }
    return os.str();
}

std::string covariance_json(const WeylCovarianceReport& report, double tolerance) {
    std::ostringstream os;
    os << "{\"weyl_covariant\":" << (report.covariant ? "true" : "false") << ",\"residuals\":[";
    for (std::size_t i = 0; i < report.residuals.size(); ++i) {
        if (i) os << ",";
        os << json_number(report.residuals[i]);
    }
    os << "],\"tolerance\":" << json_number(tolerance) << "}";
    return os.str();
}

std::string covariance_text(const WeylCovarianceReport& report, double tolerance) {
    static const char* names[4] = {"I", "X", "Y", "Z"};
    std::ostringstream os;
    os << "weyl_covariant: " << (report.covariant ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < report.residuals.size(); ++i)
        os << "residual[" << names[i] << "]: " << format_number(report.residuals[i], kTextDigits)
           << "\n";
    os << "tolerance: " << format_number(tolerance, kTextDigits) << "\n";
    return os.str();
}

std::string finite_size_json(const FiniteSizeParams& params, const FiniteSizePenalty& penalty) {
    std::ostringstream os;
    os << "{\"epsilon\":" << json_number(params.epsilon)
       << ",\"log2_dim\":" << json_number(params.log2_dim) << ",\"n\":" << params.n;
    if (params.alpha_n) os << ",\"alpha_n\":" << json_number(*params.alpha_n);
    os << ",\"delta\":" << json_number(penalty.delta)
       << ",\"per_use\":" << json_number(penalty.per_use) << "}";
    return os.str();
}

std::string finite_size_text(const FiniteSizeParams& params, const FiniteSizePenalty& penalty) {
    std::ostringstream os;
    os << "epsilon: " << format_number(params.epsilon, kTextDigits) << "\n";
    os << "log2_dim: " << format_number(params.log2_dim, kTextDigits) << "\n";
    os << "n: " << params.n << "\n";
    if (params.alpha_n) os << "alpha_n: " << format_number(*params.alpha_n, kTextDigits) << "\n";
    os << "delta: " << format_number(penalty.delta, kTextDigits) << "\n";
    os << "per_use: " << format_number(penalty.per_use, kTextDigits) << "\n";
    return os.str();
}

std::string export_dot(const QuantumNetwork& net, const std::optional<CutWitness>& witness) {
    std::vector<char> dashed(net.edges.size(), 0);
    if (witness)
        for (std::size_t idx : witness->cut_set) dashed[idx] = 1;

    std::ostringstream os;
    os << "graph network {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        os << "  \"" << net.nodes[i] << "\"";
        if (net.is_sender(i))
            os << " [shape=doublecircle]";
        else if (net.is_receiver(i))
            os << " [shape=box]";
        os << ";\n";
    }
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const Edge& e = net.edges[i];
        const double w = edge_weight(e.channel).value;
        char wbuf[32];
        if (std::isinf(w))
            std::snprintf(wbuf, sizeof(wbuf), "inf");
        else
            std::snprintf(wbuf, sizeof(wbuf), "%.3f", w);
        os << "  \"" << net.nodes[e.u] << "\" -- \"" << net.nodes[e.v] << "\" [label=\""
           << to_string(e.channel.kind);
        const std::string params = params_text(e.channel, 6);
        if (!params.empty()) os << "(" << params << ")";
        os << " | w=" << wbuf << "\"";
        if (dashed[i]) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

cplx parse_entry(const nlohmann::json& v, const std::string& where) {
    if (v.is_number()) return cplx(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v.at(0).is_number() && v.at(1).is_number())
        return cplx(v.at(0).get<double>(), v.at(1).get<double>());
    throw validation_error(where + ": matrix entry must be a number or [re, im] pair");
}

} // namespace

KrausChannel parse_kraus_channel_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw validation_error("channel document must be an object");

    if (doc.contains("kind")) return kraus_of(parse_channel_descriptor(text));

    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "dim_in" && it.key() != "dim_out" && it.key() != "kraus")
            throw validation_error("channel document: unknown field '" + it.key() + "'");
    if (!doc.contains("dim_in") || !doc.contains("dim_out") || !doc.contains("kraus"))
        throw validation_error("raw channel needs 'dim_in', 'dim_out' and 'kraus'");
    if (!doc.at("dim_in").is_number_integer() || !doc.at("dim_out").is_number_integer())
        throw validation_error("dim_in and dim_out must be integers");
    const std::size_t din = doc.at("dim_in").get<std::size_t>();
    const std::size_t dout = doc.at("dim_out").get<std::size_t>();
    if (!doc.at("kraus").is_array() || doc.at("kraus").empty())
        throw validation_error("kraus must be a nonempty array of matrices");

    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < doc.at("kraus").size(); ++k) {
        const auto& m = doc.at("kraus").at(k);
        const std::string where = "kraus[" + std::to_string(k) + "]";
        if (!m.is_array() || m.size() != dout)
            throw validation_error(where + ": expected " + std::to_string(dout) + " rows");
        ComplexMatrix op(dout, din);
        for (std::size_t r = 0; r < dout; ++r) {
            const auto& row = m.at(r);
            if (!row.is_array() || row.size() != din)
                throw validation_error(where + "[" + std::to_string(r) + "]: expected " +
                                       std::to_string(din) + " entries");
            for (std::size_t c = 0; c < din; ++c)
                op(r, c) = parse_entry(row.at(c), where);
        }
        ops.push_back(std::move(op));
    }
    try {
        return KrausChannel::make(din, dout, std::move(ops));
    } catch (const std::domain_error& e) {
        throw validation_error(e.what());
    }
}

} // namespace qnet
