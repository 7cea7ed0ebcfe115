#include "gravity/errors.hpp"

namespace gravity {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::NonDisjoint: return "NonDisjoint";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::BadPartition: return "BadPartition";
        case ErrorKind::BadS: return "BadS";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::NegativeDegree: return "NegativeDegree";
        case ErrorKind::PrimeMismatch: return "PrimeMismatch";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NotCoassociative: return "NotCoassociative";
        case ErrorKind::BadCounit: return "BadCounit";
        case ErrorKind::Truncated: return "Truncated";
        case ErrorKind::GiveUp: return "GiveUp";
        case ErrorKind::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace gravity
