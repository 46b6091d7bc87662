#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer {

enum class ErrorCode {
  NotATree,
  RotationMismatch,
  DuplicateLabel,
  NoExceptional,
  MultipleExceptional,
  EdgeNotIncident,
  InvalidParameter,
  UnknownLabel,
  UnknownGroup,
  BadPrincipalLength,
  InvalidDataset,
  MissingConjugate,
  LabelMismatch,
  SchemaError,
  IoError,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `path()` is a JSON pointer into the
// offending document for SchemaError, empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace brauer
