#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fring {

enum class ErrorCode {
  kShape,
  kBoundExceeded,
  kParentMismatch,
  kNotSubring,
  kBadModulus,
  kDegenerate,
  kHomFail,
  kPreconditionFail,
  kInvalidRing,
  kParse,
  kFatalInconsistency,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kShape: return "SHAPE";
    case ErrorCode::kBoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::kParentMismatch: return "PARENT_MISMATCH";
    case ErrorCode::kNotSubring: return "NOT_SUBRING";
    case ErrorCode::kBadModulus: return "BAD_MODULUS";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kHomFail: return "HOM_FAIL";
    case ErrorCode::kPreconditionFail: return "PRECONDITION_FAIL";
    case ErrorCode::kInvalidRing: return "INVALID_RING";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kFatalInconsistency: return "FATAL_INCONSISTENCY";
  }
  return "UNKNOWN";
}

/// Contract violation raised by library operations. The code is stable and
/// machine-readable; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fring
