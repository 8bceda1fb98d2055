#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperarena {

enum class ErrorCode {
  ArityOutOfRange,
  VertexCountOutOfRange,
  RepeatedVertexInArc,
  DuplicateSubset,
  MissingSubset,
  VertexOutOfRange,
  VertexNotInArc,
  SameVertex,
  UnknownArc,
  BadSubsetSize,
  RankOutOfRange,
  BadBound,
  BudgetExceeded,
  Format,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityOutOfRange: return "ArityOutOfRange";
    case ErrorCode::VertexCountOutOfRange: return "VertexCountOutOfRange";
    case ErrorCode::RepeatedVertexInArc: return "RepeatedVertexInArc";
    case ErrorCode::DuplicateSubset: return "DuplicateSubset";
    case ErrorCode::MissingSubset: return "MissingSubset";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::VertexNotInArc: return "VertexNotInArc";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::BadSubsetSize: return "BadSubsetSize";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

// Every library failure is reported through this type; what() starts with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperarena
