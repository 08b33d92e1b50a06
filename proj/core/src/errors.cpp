#include "shocklab/errors.hpp"

namespace shocklab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kInvalidStrength: return "InvalidStrength";
    case ErrorCode::kNoAdmissibleRoot: return "NoAdmissibleRoot";
    case ErrorCode::kSignError: return "SignError";
    case ErrorCode::kQuadrature: return "QuadratureError";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kMassTooLarge: return "MassTooLarge";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDensityFloor: return "DensityFloor";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
  }
  return "UnknownError";
}

}  // namespace shocklab
