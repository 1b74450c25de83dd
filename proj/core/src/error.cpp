#include "zdyn/error.hpp"

namespace zdyn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::EigenSeparationFailure: return "EigenSeparationFailure";
    case ErrorKind::UnknownAction: return "UnknownAction";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::NotANorm: return "NotANorm";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::InfiniteCount: return "InfiniteCount";
    case ErrorKind::InfiniteHull: return "InfiniteHull";
    case ErrorKind::NotExpansive: return "NotExpansive";
    case ErrorKind::DegenerateSync: return "DegenerateSync";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace zdyn
