#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptrack/eos.hpp"
#include "ptrack/profile.hpp"

namespace ptrack::scenario {

enum class DataKind { Riemann, NWave, Random, Table };
const char* to_string(DataKind k) noexcept;

/// Parsed run configuration. Sections: [phase], [data], [scheme], [output].
struct Config {
  PhasePair phases;

  DataKind kind = DataKind::Riemann;
  // riemann: one jump at x0
  double v_l = 1.0, u_l = 0.0, v_r = 1.0, u_r = 0.0, x0 = 0.0;
  // nwave: log p and u follow p0 * exp(P n(x)), u0 + U n(x) with n the N-profile
  // of half-width `width` centred at `center`
  double p0 = 1.0, u0 = 0.0, amp_logp = 0.0, amp_u = 0.0, center = 0.0, width = 1.0;
  // random: `pieces` jumps on [x_min, x_max] with combined variation `tv`
  std::uint64_t seed = 1;
  int pieces = 8;
  double tv = 0.1;
  double x_min = -1.0, x_max = 1.0;
  // table: rows (x, v, u); row k holds on [x_k, x_{k+1}), row 0 also to the left
  std::vector<std::array<double, 3>> table;

  int nu = 8;
  double t_max = 2.0;
  double eta = 0.0;
  double rho = 0.0;
  double jitter = 1e-9;
  std::uint64_t budget = 10'000'000;
  double v_min = 0.0;
  std::vector<double> output_times;

  std::string out_dir;
  std::vector<std::string> tables{"events", "fronts", "functionals", "profiles", "summary"};

  std::string origin;  ///< file name or "<string>"
  std::string text;    ///< raw text, hashed for provenance
};

/// Parses configuration text. Throws ParseError carrying the line and the
/// `section.key` at fault.
Config parse_config(const std::string& text, const std::string& origin = "<string>");

/// Reads and parses a file. Throws ParseError (line 0) when unreadable.
Config load_config(const std::string& path);

/// Hex CRC-32 of the configuration text.
std::string config_hash(const Config& cfg);

/// Initial datum described by the configuration.
InitialData make_initial_data(const Config& cfg);

/// Piecewise datum with `pieces` random jumps on [x_min, x_max] whose combined
/// variation TV(log p) + TV(u)/min a equals `tv`. Pressure is continuous at
/// x = 0 unless a jump lands there.
Profile random_profile(const PhasePair& phases, std::uint64_t seed, int pieces, double tv,
                       double x_min, double x_max);

}  // namespace ptrack::scenario
