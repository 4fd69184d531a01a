#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpauth {

/// Every failure the library reports. The CLI maps these onto exit codes,
/// so adding a value means extending that table too.
enum class ErrorCode {
  // hopfield-core
  LengthMismatch,
  CapacityExceeded,
  EmptyNetwork,
  Overflow,
  BadConfig,
  // codec
  NonAscii,
  TooLong,
  DelimiterInInput,
  MalformedPattern,
  EmptyImage,
  BadDimensions,
  // authstore
  DuplicateUser,
  UnknownUser,
  AuthFailed,
  ModeMismatch,
  IoFailure,
  CorruptFile,
  // bench / cli
  BadParams,
  EmptySecret,
};

/// Stable kebab-case name, used in "RESULT: error <name>" lines.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hpauth
