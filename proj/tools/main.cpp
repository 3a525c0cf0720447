#include <cstdlib>
#include <iostream>

#include "leavitt/cli.hpp"

int main(int argc, char **argv) {
  leavitt::CliEnvironment env;
  if (const char *c = std::getenv("LEAVITT_CHAR"))
    env.default_char = c;
  auto outcome = leavitt::run_cli({argv + 1, argv + argc}, env);
  std::cout << outcome.output;
  return outcome.exit_code;
}
