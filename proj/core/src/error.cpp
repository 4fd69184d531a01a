#include "hpauth/error.hpp"

namespace hpauth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::CapacityExceeded: return "capacity-exceeded";
    case ErrorCode::EmptyNetwork: return "empty-network";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::BadConfig: return "bad-config";
    case ErrorCode::NonAscii: return "non-ascii";
    case ErrorCode::TooLong: return "too-long";
    case ErrorCode::DelimiterInInput: return "delimiter-in-input";
    case ErrorCode::MalformedPattern: return "malformed-pattern";
    case ErrorCode::EmptyImage: return "empty-image";
    case ErrorCode::BadDimensions: return "bad-dimensions";
    case ErrorCode::DuplicateUser: return "duplicate-user";
    case ErrorCode::UnknownUser: return "unknown-user";
    case ErrorCode::AuthFailed: return "auth-failed";
    case ErrorCode::ModeMismatch: return "mode-mismatch";
    case ErrorCode::IoFailure: return "io-failure";
    case ErrorCode::CorruptFile: return "corrupt-file";
    case ErrorCode::BadParams: return "bad-params";
    case ErrorCode::EmptySecret: return "empty-secret";
  }
  return "unknown";
}

}  // namespace hpauth
