#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "aif/config.hpp"

namespace aif::harness {

// Thrown for --help and for every usage error. `code` is the process exit
// status and `text` is what should be printed.
struct CliExit : std::runtime_error {
  CliExit(int exit_code, std::string message) : std::runtime_error(message), code(exit_code), text(std::move(message)) {}
  int code;
  std::string text;
};

struct RunCommand {
  Config config;
  unsigned threads = 0;  // 0: one per hardware thread
  bool charts = true;
};

struct VisCommand {
  std::filesystem::path run_dir;
  // Unset: the default selection. Set but empty: aggregates only.
  std::optional<std::vector<int>> selection;
};

using Command = std::variant<RunCommand, VisCommand>;

// Subcommands: `paths` (action-unaware), `plans` (action-aware), `vis`.
// The arguments exclude the program name. The short forms -lB and -lA are
// accepted for --learn_B and --learn_A.
Command parse_cli(std::vector<std::string> args);

std::string usage();

}  // namespace aif::harness
