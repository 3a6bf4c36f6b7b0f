#pragma once

#include <stdexcept>
#include <string>

namespace theta {

enum class ErrorCode {
    VariableMismatch,
    FieldMismatch,
    ParseError,
    NotInSubmodule,
    IllFormedMap,
    NotAComplex,
    NotGraded,
    NonIsolated,
    NoStabilization,
    LiftFailed,
    InfiniteLength,
    WrongPoleOrder,
    DivisionByZeroSeries,
    NotIsolatedIntersection,
    Precondition,
    Internal,
};

const char* error_code_name(ErrorCode c);

/// Engine-level error with a stable machine-readable code.
class EngineError : public std::runtime_error {
public:
    EngineError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw EngineError(code, msg);
}

} // namespace theta
