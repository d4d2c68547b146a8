#include "logcsm/error.hpp"

namespace logcsm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFactors: return "EmptyFactors";
    case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidSurfaceData: return "InvalidSurfaceData";
    case ErrorCode::NotADivisorClass: return "NotADivisorClass";
    case ErrorCode::NotAUnitSeries: return "NotAUnitSeries";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedExpression: return "MalformedExpression";
    case ErrorCode::MissingSmoothDim: return "MissingSmoothDim";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "UnknownError";
}

}  // namespace logcsm
