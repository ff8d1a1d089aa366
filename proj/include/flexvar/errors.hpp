#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flexvar {

// Rejected input: malformed expressions, bad scenarios, violated preconditions.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Expression text that failed to parse. Carries the byte offset of the failure
// and the set of tokens that would have been accepted there.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : ValidationError(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// An evaluation left the mathematical domain (log of a non-positive value,
// division by zero, degenerate metric at a quadrature node, ...).
// The CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flexvar
