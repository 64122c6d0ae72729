#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abmod {

enum class ErrorKind {
    NotAUnit,
    NonSquare,
    HostMismatch,
    PrecisionExhausted,
    NotRegular,
    NotNormal,
    NotAStable,
    BadAlpha,
    NotGeometric,
    NoEmbeddingFound,
    DegreeBoundExceeded,
    ValidationFailed,
    InvalidArgument,
    ParseError,
    UnknownName,
    DuplicateName,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure in the library is reported through this type; the kind is the
// stable, machine-readable part and the message carries the diagnostics.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace abmod
