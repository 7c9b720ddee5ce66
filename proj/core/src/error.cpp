#include "tricop/error.hpp"

namespace tricop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NotExtremal: return "NotExtremal";
    case ErrorCode::NoConsistentSign: return "NoConsistentSign";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateC: return "DegenerateC";
    case ErrorCode::RankOne: return "RankOne";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::MalformedData: return "MalformedData";
  }
  return "Unknown";
}

}  // namespace tricop
