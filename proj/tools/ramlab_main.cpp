#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_format;
  if (const char* env = std::getenv("RAMLAB_FORMAT")) env_format = env;
  return ramlab::cli::run(args, std::cout, std::cerr, env_format);
}
