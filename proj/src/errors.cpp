#include "abmod/errors.hpp"

namespace abmod {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAStable: return "NotAStable";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::NoEmbeddingFound: return "NoEmbeddingFound";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    }
    return "Unknown";
}

}  // namespace abmod
