#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptrack/tracker.hpp"

namespace ptrack::io {

/// Written as a comment block at the top of every table.
struct Provenance {
  std::string version;
  std::string config_hash;
  std::uint64_t seed = 0;
};

/// Shortest text that reads back to the same double (17 significant digits).
std::string fmt(double x);

void write_events(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p);
/// One row per straight front segment; open segments end at t_end.
void write_fronts(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p);
void write_functionals(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p);
/// One row per cell of each stored profile.
void write_profiles(std::ostream& os, const std::vector<std::pair<double, Profile>>& profiles,
                    const Provenance& p);

/// A table as read back: leading '#' comment lines, the header and the rows.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range when missing.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

Table read_table(std::istream& is);
Table read_table_file(const std::string& path);

}  // namespace ptrack::io
