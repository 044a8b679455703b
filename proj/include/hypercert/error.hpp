#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercert {

enum class ErrorKind {
    DivisionByZeroPoly,
    DuplicateAbscissa,
    NotIntegerDifference,
    NoTermination,
    PoleError,
    NotBalanced,
    NoneExists,
    DegreeTooHigh,
    PreconditionViolated,
    RangeError,
    ProofReplayFailure,
    ParseError,
    UndeclaredSymbol,
    UnboundSymbol,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures additionally report the byte offset and what was expected there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected)
        : Error(ErrorKind::ParseError,
                "parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string &expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace hypercert
