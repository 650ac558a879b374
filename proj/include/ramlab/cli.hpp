#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success / all checks pass, 1 usage or input error,
// 2 internal cross-check mismatch or failed check.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ramlab/regular_system.hpp"

namespace ramlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

enum class Format { Json, Csv, Plain };

struct OutputSpec {
  Format format = Format::Plain;
  std::optional<std::string> destination;  // stdout when empty
};

Format parse_format(const std::string& text);

/// "D", "U", "MIX", or a path to a JSON system spec.
RegularSystem resolve_system(const std::string& name_or_path);

/// `args` excludes the program name. `env_format` plays the role of
/// RAMLAB_FORMAT: it replaces the plain default, and --format beats it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_format = std::nullopt);

}  // namespace ramlab::cli
