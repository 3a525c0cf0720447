#pragma once

#include <optional>
#include <string>
#include <vector>

namespace leavitt {

struct CliEnvironment {
  /// Overrides the default characteristic (LEAVITT_CHAR).
  std::optional<std::string> default_char;
};

struct CliOutcome {
  /// 0 success, 1 domain error, 2 parse or usage error.
  int exit_code = 0;
  std::string output;
};

/// Runs one command. \p args excludes the program name.
CliOutcome run_cli(const std::vector<std::string> &args,
                   const CliEnvironment &env = {});

} // namespace leavitt
