#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "acyclic/field.hpp"

namespace acyclic::cli {

enum class Command { Validate, Tor, Ce, TransitionCheck, Certify, KunnethCheck };
enum class OutputFormat { Table, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest ambient accepted by the chain commands.
inline constexpr std::size_t kMaxAmbient = 12;

struct RunConfig {
  Command command = Command::Certify;
  FieldSpec field;
  bool field_given = false;
  std::optional<std::size_t> ambient;
  std::optional<std::size_t> level;
  /// Built-in name or path to a JSON module.
  std::string module;
  /// nullopt means all degrees.
  std::optional<std::size_t> degree;
  OutputFormat output = OutputFormat::Table;
  bool parallel = true;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct ParsedArgs {
  std::optional<RunConfig> config;
  /// Help text or usage error when config is empty.
  RunResult early;
};

ParsedArgs parse_args(int argc, const char* const* argv);

/// Executes one command; never throws.
RunResult run(const RunConfig& config);

std::string command_name(Command c);

}  // namespace acyclic::cli
