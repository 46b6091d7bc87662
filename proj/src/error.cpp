#include "brauer/error.hpp"

namespace brauer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NoExceptional: return "NoExceptional";
    case ErrorCode::MultipleExceptional: return "MultipleExceptional";
    case ErrorCode::EdgeNotIncident: return "EdgeNotIncident";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::BadPrincipalLength: return "BadPrincipalLength";
    case ErrorCode::InvalidDataset: return "InvalidDataset";
    case ErrorCode::MissingConjugate: return "MissingConjugate";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(message), code_(code), path_(std::move(path)) {}

}  // namespace brauer
