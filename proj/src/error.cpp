#include "reeb/error.hpp"

namespace reeb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonpositiveMeanIndex: return "NonpositiveMeanIndex";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::InconsistentFamily: return "InconsistentFamily";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::NonintegralN: return "NonintegralN";
    case ErrorCode::ZeroSign: return "ZeroSign";
    case ErrorCode::OddDWithHNot1: return "OddDWithHNot1";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadCongruence: return "BadCongruence";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::NotLacunary: return "NotLacunary";
    case ErrorCode::WindowMismatch: return "WindowMismatch";
    case ErrorCode::DirectionMismatch: return "DirectionMismatch";
    case ErrorCode::CertInvalid: return "CertInvalid";
    case ErrorCode::UnknownDegreeTouched: return "UnknownDegreeTouched";
    case ErrorCode::SequencesDiffer: return "SequencesDiffer";
    case ErrorCode::BadDirection: return "BadDirection";
  }
  return "Unknown";
}

}  // namespace reeb
