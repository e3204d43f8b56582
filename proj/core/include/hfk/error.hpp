#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfk {

enum class ErrorCode {
  NotAPermutation,
  MarkingCollision,
  SizeMismatch,
  ParseError,
  FileNotFound,
  ResourceBound,
  InconsistentComplex,
  NotDivisible,
  NotAKnot,
  NegativeIndex,
  IndexMismatch,
  UnsupportedQ,
  InvalidArgument,
  DuplicateName,
  UnknownEntry,
  SnapshotFormat,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures surface as hfk::Error; code() is the stable name the
// CLI prints and maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace hfk
