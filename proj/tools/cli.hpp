#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hpauth/authstore.hpp"
#include "hpauth/error.hpp"

namespace hpauth::cli {

struct CommandOutcome {
  int exit_code = 0;
  std::string report;        // human-readable lines, each ending in '\n'
  std::string machine_line;  // "RESULT: ..."
  std::string diagnostics;   // for stderr
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

struct Io {
  std::istream& in;
  /// Prompts go here, never to stdout.
  std::ostream& prompt;
  /// stdin is a terminal: prompt and suppress echo.
  bool interactive = false;
};

/// Parses argv (without the program name) and runs one subcommand. Never
/// throws for user input.
CommandOutcome run(const std::vector<std::string>& args, const EnvLookup& env, Io io);

/// Reads one secret line. Trailing "\n" / "\r\n" is stripped.
/// Error(EmptySecret) when nothing is left.
std::string prompt_secret(Io io, const std::string& label);

/// report followed by machine_line, which is always the last line.
std::string format_report(const CommandOutcome& outcome);

int exit_code_for(ErrorCode code) noexcept;

}  // namespace hpauth::cli
