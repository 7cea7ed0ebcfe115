#pragma once

#include <stdexcept>
#include <string>

namespace gravity {

enum class ErrorKind {
    Parse,
    OutOfBounds,
    NonDisjoint,
    EmptySubset,
    BadPartition,
    BadS,
    OutOfRange,
    Unreachable,
    NegativeDegree,
    PrimeMismatch,
    DegreeMismatch,
    NotCoassociative,
    BadCounit,
    Truncated,
    GiveUp,
    BadInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace gravity
