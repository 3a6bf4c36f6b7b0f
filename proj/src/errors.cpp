#include "theta/errors.hpp"

namespace theta {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::VariableMismatch: return "VariableMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotInSubmodule: return "NotInSubmodule";
        case ErrorCode::IllFormedMap: return "IllFormedMap";
        case ErrorCode::NotAComplex: return "NotAComplex";
        case ErrorCode::NotGraded: return "NotGraded";
        case ErrorCode::NonIsolated: return "NonIsolated";
        case ErrorCode::NoStabilization: return "NoStabilization";
        case ErrorCode::LiftFailed: return "LiftFailed";
        case ErrorCode::InfiniteLength: return "InfiniteLength";
        case ErrorCode::WrongPoleOrder: return "WrongPoleOrder";
        case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
        case ErrorCode::NotIsolatedIntersection: return "NotIsolatedIntersection";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace theta
