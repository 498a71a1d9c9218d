#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncpart {

enum class ErrorCode {
  UnknownSpec,
  InvalidTable,
  MixedGroups,
  EmptyIndexSet,
  UnknownElementName,
  NotAPartition,
  SizeLimitExceeded,
  BlockNotInPartition,
  MixedRows,
  EmptyRow,
  LengthMismatch,
  ShapeMismatch,
  GroupMismatch,
  MiddleSizeMismatch,
  MiddleMismatch,
  TrivialComponent,
  UnsolvableSubsystem,
  ConstantsUnavailable,
  ZeroComposite,
  ParseError,
  InvalidPartition,
  InvalidColoring,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ncpart
