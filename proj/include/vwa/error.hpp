#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vwa {

enum class ErrorCode {
  DimensionMismatch,
  RankDeficient,
  DuplicateNodes,
  DegreeTooHigh,
  Breakdown,
  NonFinite,
  InvalidArgument,
  Io,
  Parse,
  SchemaVersion,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::Breakdown: return "Breakdown";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::SchemaVersion: return "SchemaVersion";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vwa
