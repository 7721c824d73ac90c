#pragma once

#include <stdexcept>
#include <string>

namespace splitstar {

// One shared error vocabulary for the whole library.  Every throwing
// operation documents which of these codes it can raise.
enum class ErrorCode {
  NotABijection,
  BadLength,
  BadToken,
  OutOfRange,
  DimensionMismatch,
  BadIndex,
  NotAdjacent,
  NotIntraSubnetwork,
  OutOfScope,
  SameEndpoints,
  SameVertex,
  DimensionTooSmall,
  BadSymbol,
  BadPair,
  EdgeTouchesRemoved,
  BadSelection,
  NotADcc,
  NotBaseDimension,
  UnsupportedDimension,
  InternalError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotIntraSubnetwork: return "NotIntraSubnetwork";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::SameEndpoints: return "SameEndpoints";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::EdgeTouchesRemoved: return "EdgeTouchesRemoved";
    case ErrorCode::BadSelection: return "BadSelection";
    case ErrorCode::NotADcc: return "NotADcc";
    case ErrorCode::NotBaseDimension: return "NotBaseDimension";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace splitstar
