#pragma once

// The CLI subcommands as library calls returning JSON and an exit code.

#include "fewroots/io.hpp"
#include "fewroots/upreal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fewroots {

enum class Command { kBound, kFacets, kVerify, kLenstraDm, kLenstraGamma };
enum class OutputFormat { kJson, kText };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitInternal = 4;

struct RunConfig {
  Command command = Command::kBound;
  /// Contents of the system file (JSON or text). Empty for lenstra and random verify runs.
  std::string input;
  std::optional<long> prime;
  std::optional<long> d, e, f, delta;
  bool global = false;
  bool affine = false;
  long height_cap = 10;
  int precision = kDefaultDigits;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kJson;
  /// verify without an input system: this many seeded random trinomials.
  long random_instances = 0;
  long lenstra_m = 0;
  long lenstra_t = 0;
  std::vector<long> lenstra_set;
};

struct CommandResult {
  int exit_code = kExitOk;
  Json output;
};

CommandResult cmd_bound(const RunConfig& config);
CommandResult cmd_facets(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_lenstra(const RunConfig& config);

/// Dispatches on config.command; exceptions become {"error": ...} with the matching exit code.
CommandResult run(const RunConfig& config);

std::string render(const CommandResult& result, OutputFormat format);

}  // namespace fewroots
