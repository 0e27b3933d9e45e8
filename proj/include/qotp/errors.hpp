#pragma once

#include <stdexcept>
#include <string>

namespace qotp {

// Thrown when a matrix fails a positivity requirement.
struct NotPsdError : std::domain_error {
    explicit NotPsdError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a one-time program instance is evaluated twice.
struct OtpConsumedError : std::logic_error {
    explicit OtpConsumedError(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a computation would exceed the dense-matrix dimension cap.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the exact success predictor on circuit topologies it cannot
// handle (an OTP output fanning out and reconverging).
struct UnsupportedTopologyError : std::runtime_error {
    explicit UnsupportedTopologyError(const std::string& what) : std::runtime_error(what) {}
};

// Wire-frame decode failure; offset is the byte position inside the frame.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Session ended with a protocol abort.
struct ProtocolAbort : std::runtime_error {
    explicit ProtocolAbort(const std::string& reason) : std::runtime_error(reason) {}
};

}  // namespace qotp
