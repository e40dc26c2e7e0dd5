#pragma once

#include "qnet/choi.hpp"
#include "qnet/solver.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qnet {

// Deterministic number rendering: fixed significant digits, "inf" for
// infinity. JSON reports use 12 significant digits, text reports 4.
std::string format_number(double value, int significant_digits);

std::string bound_report_json(const QuantumNetwork& net, const BoundReport& report);
std::string bound_report_text(const QuantumNetwork& net, const BoundReport& report);

std::string weights_json(const QuantumNetwork& net, const std::vector<EdgeWeight>& table);
std::string weights_text(const QuantumNetwork& net, const std::vector<EdgeWeight>& table);

std::string per_sender_json(const QuantumNetwork& net, const std::vector<SenderBound>& bounds);
std::string per_sender_text(const QuantumNetwork& net, const std::vector<SenderBound>& bounds);

std::string covariance_json(const WeylCovarianceReport& report, double tolerance);
std::string covariance_text(const WeylCovarianceReport& report, double tolerance);

std::string finite_size_json(const FiniteSizeParams& params, const FiniteSizePenalty& penalty);
std::string finite_size_text(const FiniteSizeParams& params, const FiniteSizePenalty& penalty);

// Graphviz export. Senders render as doublecircles, receivers as boxes;
// every edge is labeled "kind(params) | w=<weight>". When a witness is
// given its cut-set edges are dashed.
std::string export_dot(const QuantumNetwork& net,
                       const std::optional<CutWitness>& witness = std::nullopt);

// Channel input for the covariance checker: either a catalog descriptor
// object {"kind": ...} with a discrete-variable kind, or a raw Kraus set
// {"dim_in": 2, "dim_out": 2, "kraus": [matrix, ...]} where each matrix is
// rows of entries and an entry is a number or an [re, im] pair.
KrausChannel parse_kraus_channel_json(std::string_view text);

} // namespace qnet
