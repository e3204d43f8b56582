#include "hfk/error.hpp"

namespace hfk {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::MarkingCollision: return "MarkingCollision";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ResourceBound: return "ResourceBound";
    case ErrorCode::InconsistentComplex: return "InconsistentComplex";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::SnapshotFormat: return "SnapshotFormat";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace hfk
