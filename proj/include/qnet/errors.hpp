#pragma once

#include <stdexcept>
#include <string>

namespace qnet {

// Thrown when an input document or descriptor violates its schema or an
// invariant. Maps to CLI exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a request exceeds a configured resource limit, e.g. the
// free-node limit of exhaustive cut enumeration. Maps to CLI exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation is asked for a channel kind it does not support
// (continuous-variable kinds have no Kraus realization here).
class unsupported_kind_error : public std::runtime_error {
public:
    explicit unsupported_kind_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qnet
