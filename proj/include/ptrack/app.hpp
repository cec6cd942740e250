#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ptrack/scenario.hpp"

namespace ptrack::app {

/// Environment variable naming the output directory when no flag is given.
inline constexpr const char* kOutDirEnv = "PTRACK_OUT_DIR";

/// Result of one command. `outcome` is 0 (pass) or 1 (domain-negative);
/// usage, parse and internal failures are thrown.
struct Report {
  int outcome = 0;
  std::string text;
  nlohmann::json doc;
  std::vector<std::string> artifacts;
};

/// Precedence: explicit flag, then the environment, then [output] dir, then
/// "ptrack_out". An empty result means "write nothing" (only when
/// `fallback` is false).
std::string resolve_out_dir(const std::string& flag, const scenario::Config* cfg,
                            bool fallback = true);

/// Admissibility of the configured datum; writes check.json.
Report check(const scenario::Config& cfg, const std::string& out_dir);

/// Front-tracking run with table output. Inadmissible data is refused unless
/// `force`, which also turns the monitors into warnings.
Report run(const scenario::Config& cfg, const std::string& out_dir, bool force);

/// Runs each nu of a strictly increasing list (empty = the configured nu).
Report converge(const scenario::Config& cfg, const std::vector<int>& nus,
                const std::string& out_dir, bool force);

/// Oracle sweeps: one suite name or "all". Writes verify.json when
/// `out_dir` is non-empty.
Report verify(const std::string& suite, int grid, std::uint64_t seed, const std::string& out_dir);

}  // namespace ptrack::app
