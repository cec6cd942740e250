#include "ptrack/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ptrack/error.hpp"

namespace ptrack::io {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void header(std::ostream& os, const Provenance& p, const char* table) {
  os << "# ptrack " << p.version << "\n"
     << "# table " << table << "\n"
     << "# config_hash " << p.config_hash << "\n"
     << "# seed " << p.seed << "\n";
}

int fam(Family f) { return static_cast<int>(f); }

const char* side(Side s) { return s == Side::Left ? "L" : "R"; }

std::string refs(const std::vector<tracker::WaveRef>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += std::to_string(w.id) + ":" + std::to_string(fam(w.family)) + ":" + fmt(w.strength) +
           ":" + std::to_string(w.order);
  }
  return out;
}

}  // namespace

void write_events(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p) {
  header(os, p, "events");
  os << "index,time,x,kind,class,in1_id,in1_family,in1_strength,in1_order,"
        "in2_id,in2_family,in2_strength,in2_order,n_out,outgoing,dF,solver_residual\n";
  for (const auto& e : tr.events) {
    os << e.index << ',' << fmt(e.time) << ',' << fmt(e.x) << ',' << tracker::to_string(e.kind)
       << ',' << e.cls.label();
    for (const auto& w : e.incoming) {
      os << ',' << w.id << ',' << fam(w.family) << ',' << fmt(w.strength) << ',' << w.order;
    }
    os << ',' << e.outgoing.size() << ',' << refs(e.outgoing) << ',' << fmt(e.delta.total) << ','
       << fmt(e.solver_residual) << '\n';
  }
}

void write_fronts(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p) {
  header(os, p, "fronts");
  os << "id,family,strength,order,side,t_start,x_start,t_end,x_end,speed\n";
  for (const auto& s : tr.timeline) {
    const double t1 = std::min(s.t_death, tr.t_end);
    os << s.id << ',' << fam(s.family) << ',' << fmt(s.strength) << ',' << s.order << ','
       << side(s.side) << ',' << fmt(s.t_birth) << ',' << fmt(s.x_birth) << ',' << fmt(t1) << ','
       << fmt(s.x_birth + s.speed * (t1 - s.t_birth)) << ',' << fmt(s.speed) << '\n';
  }
}

void write_functionals(std::ostream& os, const tracker::Trajectory& tr, const Provenance& p) {
  header(os, p, "functionals");
  os << "t,L,V,Q,F,Lbar,composite_abs,max_order,tail2,tv_vu,max_strength\n";
  for (const auto& s : tr.series) {
    os << fmt(s.t) << ',' << fmt(s.L) << ',' << fmt(s.V) << ',' << fmt(s.Q) << ',' << fmt(s.F)
       << ',' << fmt(s.Lbar) << ',' << fmt(s.composite_abs) << ',' << s.max_order << ','
       << fmt(s.tail2) << ',' << fmt(s.tv_vu) << ',' << fmt(s.max_strength) << '\n';
  }
}

void write_profiles(std::ostream& os, const std::vector<std::pair<double, Profile>>& profiles,
                    const Provenance& p) {
  header(os, p, "profiles");
  os << "t,cell,x_left,x_right,v,u\n";
  for (const auto& [t, pr] : profiles) {
    for (std::size_t k = 0; k < pr.cells(); ++k) {
      const double xl = k == 0 ? -HUGE_VAL : pr.breaks[k - 1];
      const double xr = k < pr.breaks.size() ? pr.breaks[k] : HUGE_VAL;
      os << fmt(t) << ',' << k << ',' << fmt(xl) << ',' << fmt(xr) << ',' << fmt(pr.v[k]) << ','
         << fmt(pr.u[k]) << '\n';
    }
  }
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return k;
  }
  throw std::out_of_range("no column '" + name + "'");
}

double Table::number(std::size_t row, const std::string& name) const {
  const std::string& s = rows.at(row).at(column(name));
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

namespace {
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}
}  // namespace

Table read_table(std::istream& is) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!have_header && !line.empty() && line[0] == '#') {
      t.comments.push_back(line);
      continue;
    }
    if (!have_header) {
      t.header = split(line);
      have_header = true;
      continue;
    }
    auto row = split(line);
    if (row.size() != t.header.size()) {
      throw ParseError("table row has " + std::to_string(row.size()) + " cells, header has " +
                           std::to_string(t.header.size()),
                       static_cast<int>(t.comments.size() + t.rows.size() + 2), "");
    }
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("table has no header", 0, "");
  return t;
}

Table read_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open table", 0, "");
  return read_table(f);
}

}  // namespace ptrack::io
