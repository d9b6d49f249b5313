#include "linknav/error.hpp"

namespace linknav {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::InadmissibleVertex: return "InadmissibleVertex";
    case ErrorCode::InadmissibleEdge: return "InadmissibleEdge";
    case ErrorCode::IllegalMoveWouldEmptyPart: return "IllegalMove::WouldEmptyPart";
    case ErrorCode::IllegalMoveDestinationLong: return "IllegalMove::DestinationLong";
    case ErrorCode::IllegalMoveMalformed: return "IllegalMove::Malformed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::NotABow: return "NotABow";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NormalizationFailed: return "NormalizationFailed";
    case ErrorCode::InternalBoundViolation: return "InternalBoundViolation";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::ConvexityLost: return "ConvexityLost";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NoCut: return "NoCut";
    case ErrorCode::HomotopyStalled: return "HomotopyStalled";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace linknav
