#pragma once

#include <stdexcept>
#include <string>

namespace cohera {

// Error codes shared between the C++ core and the C API surface.
enum class Errc {
  kDuplicateWorld = 1,
  kEmptySpace,
  kSpaceMismatch,
  kDimensionMismatch,
  kZeroQueriedHere,
  kZeroGambleQuery,
  kTopNotCoherent,
  kEmptyEvent,
  kTooFewPartitions,
  kLimitExceeded,
  kUnknownQuestion,
  kUnknownName,
  kUnsupported,
  kParseError,
  kValidationError,
  kNotInTarget,
  kNullArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const { return code_; }

  static const char* name(Errc c) {
    switch (c) {
      case Errc::kDuplicateWorld: return "DuplicateWorld";
      case Errc::kEmptySpace: return "EmptySpace";
      case Errc::kSpaceMismatch: return "SpaceMismatch";
      case Errc::kDimensionMismatch: return "DimensionMismatch";
      case Errc::kZeroQueriedHere: return "ZeroQueriedHere";
      case Errc::kZeroGambleQuery: return "ZeroGambleQuery";
      case Errc::kTopNotCoherent: return "TopNotCoherent";
      case Errc::kEmptyEvent: return "EmptyEvent";
      case Errc::kTooFewPartitions: return "TooFewPartitions";
      case Errc::kLimitExceeded: return "LimitExceeded";
      case Errc::kUnknownQuestion: return "UnknownQuestion";
      case Errc::kUnknownName: return "UnknownName";
      case Errc::kUnsupported: return "Unsupported";
      case Errc::kParseError: return "ParseError";
      case Errc::kValidationError: return "ValidationError";
      case Errc::kNotInTarget: return "NotInTarget";
      case Errc::kNullArgument: return "NullArgument";
    }
    return "Unknown";
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace cohera
