#pragma once

#include <stdexcept>
#include <string>

namespace skmaass {

// Invalid configuration or contract violation (bad weight, bad threshold, ...).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A query outside the range covered by the built tables.
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& msg) : std::out_of_range(msg) {}
};

// File system / persistence failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A runtime check of a proven statement failed: this signals a bug, a
// corrupted cache, or a certified violation of an asserted inequality.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skmaass
