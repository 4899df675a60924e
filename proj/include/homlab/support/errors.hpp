#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homlab {

/// Invalid physical parameters or malformed configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation precondition (unsorted input, bad range, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Domain error on a numeric argument (non-finite, out of range).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed file contents. Carries the byte offset of the first violation.
struct FormatError : std::runtime_error {
    std::uint64_t offset;
    FormatError(const std::string& what, std::uint64_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
};

/// An estimator had too little data to produce a meaningful value.
struct InsufficientStatsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numeric routine failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A generation request would exceed the configured in-memory event cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homlab
