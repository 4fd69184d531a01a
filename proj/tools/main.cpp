#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto env = [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
  const hpauth::cli::Io io{std::cin, std::cerr, ::isatty(STDIN_FILENO) != 0};
  const auto outcome = hpauth::cli::run(args, env, io);
  std::cerr << outcome.diagnostics;
  std::cout << hpauth::cli::format_report(outcome) << std::flush;
  return outcome.exit_code;
}
