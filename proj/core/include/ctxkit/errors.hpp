#pragma once

#include <stdexcept>
#include <string>

namespace ctxkit {

// Malformed or inconsistent input data (bad files, foreign ids, broken tables).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration whose cardinality exceeds the configured cap. Never sampled,
// always refused.
struct too_large_error : std::runtime_error {
    too_large_error(const std::string& what, std::string cardinality_)
        : std::runtime_error(what), cardinality(std::move(cardinality_)) {}
    std::string cardinality;  // exact product cardinality, decimal string
};

// Operation not defined for the given data (e.g. holonomy on fibres with more
// than two elements).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ctxkit
