// Error taxonomy shared across the library.
//
// Error carries a stable machine-readable code plus a human message; it covers
// domain-level validation failures (bad trees, bad descriptors, inconsistent
// inputs).  FormatError covers I/O and document-schema problems and maps to a
// distinct process exit code in the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

enum class ErrorCode {
  NotATree,
  BadRotation,
  BadStem,
  BadMultiplicity,
  NotReflectionSymmetric,
  EdgeOnStem,
  ProjectiveInput,
  CaseMismatch,
  InvalidDescriptor,
  CountMismatch,
  InternalCountMismatch,
  NeedsDistance,
  NotSelfDualPosition,
  ParityMismatch,
  MissingAnchor,
  InconsistentAnchors,
  BadEpsilon,
  SizeSumMismatch,
  BadSquareMap,
  NoIdentityClass,
  NotLinear,
  DualityMismatch,
  NumericallyUnstable,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed documents, unknown fields, unreadable files.  CLI exit code 2.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace brauer
