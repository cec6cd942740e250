#include "ptrack/scenario.hpp"

#include <algorithm>
#include <boost/crc.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ptrack/error.hpp"

namespace ptrack::scenario {

const char* to_string(DataKind k) noexcept {
  switch (k) {
    case DataKind::Riemann: return "riemann";
    case DataKind::NWave: return "nwave";
    case DataKind::Random: return "random";
    case DataKind::Table: return "table";
  }
  return "?";
}

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Line numbers of "section.key" entries, for diagnostics.
std::map<std::string, int> index_lines(const std::string& text) {
  std::map<std::string, int> lines;
  std::istringstream in(text);
  std::string line, section;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty() || t[0] == ';' || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      lines.emplace(section, n);
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) continue;
    lines.emplace(section.empty() ? trim(t.substr(0, eq)) : section + "." + trim(t.substr(0, eq)), n);
  }
  return lines;
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::map<std::string, int> lines, std::string origin)
      : tree_(tree), lines_(std::move(lines)), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
    const auto it = lines_.find(field);
    const int line = it == lines_.end() ? 0 : it->second;
    std::ostringstream os;
    os << origin_;
    if (line > 0) os << ":" << line;
    os << ": field '" << field << "': " << msg;
    throw ParseError(os.str(), line, field);
  }

  std::optional<std::string> raw(const std::string& field) {
    seen_.insert(field);
    const auto v = tree_.get_optional<std::string>(pt::ptree::path_type(field, '.'));
    if (!v) return std::nullopt;
    return trim(*v);
  }

  double real(const std::string& field, double fallback) {
    const auto s = raw(field);
    return s ? parse_real(field, *s) : fallback;
  }
  double real_required(const std::string& field) {
    const auto s = raw(field);
    if (!s) fail(field, "missing required value");
    return parse_real(field, *s);
  }
  long long integer(const std::string& field, long long fallback) {
    const auto s = raw(field);
    if (!s) return fallback;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s->c_str(), &end, 10);
    if (s->empty() || *end != '\0' || errno != 0) fail(field, "expected an integer, got '" + *s + "'");
    return v;
  }
  std::vector<double> reals(const std::string& field) {
    std::vector<double> out;
    const auto s = raw(field);
    if (!s) return out;
    std::string item;
    std::istringstream in(*s);
    while (std::getline(in, item, ',')) out.push_back(parse_real(field, trim(item)));
    return out;
  }
  double parse_real(const std::string& field, const std::string& s) const {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || errno != 0 || !std::isfinite(v)) {
      fail(field, "expected a finite number, got '" + s + "'");
    }
    return v;
  }

  /// Rejects keys that were never read.
  void reject_unknown() const {
    for (const auto& [section, body] : tree_) {
      if (body.empty()) {
        fail(section, "unexpected key outside a section");
      }
      for (const auto& [key, value] : body) {
        const std::string f = section + "." + key;
        if (!seen_.count(f)) fail(f, "unknown key");
      }
    }
  }

 private:
  const pt::ptree& tree_;
  std::map<std::string, int> lines_;
  std::string origin_;
  std::set<std::string> seen_;
};

std::vector<std::array<double, 3>> parse_rows(Reader& rd, const std::string& field,
                                              const std::string& text) {
  std::vector<std::array<double, 3>> rows;
  std::string row;
  std::istringstream in(text);
  while (std::getline(in, row, ';')) {
    std::istringstream cells(row);
    std::array<double, 3> r{};
    std::string tok;
    int k = 0;
    while (cells >> tok) {
      if (k >= 3) rd.fail(field, "each row needs exactly three numbers 'x v u'");
      r[static_cast<std::size_t>(k++)] = rd.parse_real(field, tok);
    }
    if (k == 0) continue;
    if (k != 3) rd.fail(field, "each row needs exactly three numbers 'x v u'");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Config parse_config(const std::string& text, const std::string& origin) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    std::ostringstream os;
    os << origin << ":" << e.line() << ": " << e.message();
    throw ParseError(os.str(), static_cast<int>(e.line()), "");
  }
  Reader rd(tree, index_lines(text), origin);
  Config c;
  c.origin = origin;
  c.text = text;

  const double lam_l = rd.real("phase.lam_l", 0.0);
  const double lam_r = rd.real("phase.lam_r", 1.0);
  const double a_l = rd.real_required("phase.a_l");
  const double a_r = rd.real_required("phase.a_r");
  try {
    c.phases = PhasePair::make(lam_l, lam_r, a_l, a_r);
  } catch (const DomainError& e) {
    rd.fail("phase.a_l", e.what());
  }

  const std::string kind = rd.raw("data.kind").value_or("riemann");
  if (kind == "riemann") {
    c.kind = DataKind::Riemann;
    c.v_l = rd.real_required("data.v_l");
    c.u_l = rd.real("data.u_l", 0.0);
    c.v_r = rd.real_required("data.v_r");
    c.u_r = rd.real("data.u_r", 0.0);
    c.x0 = rd.real("data.x0", 0.0);
    if (!(c.v_l > 0.0)) rd.fail("data.v_l", "specific volume must be positive");
    if (!(c.v_r > 0.0)) rd.fail("data.v_r", "specific volume must be positive");
  } else if (kind == "nwave") {
    c.kind = DataKind::NWave;
    c.p0 = rd.real("data.p0", 1.0);
    c.u0 = rd.real("data.u0", 0.0);
    c.amp_logp = rd.real("data.amp_logp", 0.0);
    c.amp_u = rd.real("data.amp_u", 0.0);
    c.center = rd.real("data.center", 0.0);
    c.width = rd.real("data.width", 1.0);
    if (!(c.p0 > 0.0)) rd.fail("data.p0", "pressure must be positive");
    if (!(c.width > 0.0)) rd.fail("data.width", "width must be positive");
  } else if (kind == "random") {
    c.kind = DataKind::Random;
    const long long seed = rd.integer("data.seed", 1);
    if (seed < 0) rd.fail("data.seed", "seed must be non-negative");
    c.seed = static_cast<std::uint64_t>(seed);
    const long long pieces = rd.integer("data.pieces", 8);
    if (pieces < 1 || pieces > 1000000) rd.fail("data.pieces", "need 1 <= pieces <= 10^6");
    c.pieces = static_cast<int>(pieces);
    c.tv = rd.real_required("data.tv");
    if (!(c.tv >= 0.0)) rd.fail("data.tv", "total variation must be non-negative");
    c.x_min = rd.real("data.x_min", -1.0);
    c.x_max = rd.real("data.x_max", 1.0);
    if (!(c.x_max > c.x_min)) rd.fail("data.x_max", "need x_min < x_max");
  } else if (kind == "table") {
    c.kind = DataKind::Table;
    if (const auto rows = rd.raw("data.rows")) {
      c.table = parse_rows(rd, "data.rows", *rows);
    } else if (const auto file = rd.raw("data.file")) {
      std::ifstream f(*file);
      if (!f) rd.fail("data.file", "cannot open '" + *file + "'");
      std::string line, all;
      while (std::getline(f, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        all += t + ";";
      }
      c.table = parse_rows(rd, "data.file", all);
    } else {
      rd.fail("data.rows", "table data needs 'rows' or 'file'");
    }
    if (c.table.empty()) rd.fail("data.rows", "table is empty");
    for (std::size_t k = 0; k < c.table.size(); ++k) {
      if (!(c.table[k][1] > 0.0)) rd.fail("data.rows", "specific volume must be positive");
      if (k > 0 && !(c.table[k][0] > c.table[k - 1][0])) rd.fail("data.rows", "x must increase strictly");
    }
  } else {
    rd.fail("data.kind", "expected riemann, nwave, random or table, got '" + kind + "'");
  }

  const long long nu = rd.integer("scheme.nu", 8);
  if (nu < 1 || nu > 1'000'000) rd.fail("scheme.nu", "expected a positive integer");
  c.nu = static_cast<int>(nu);
  c.t_max = rd.real("scheme.t_max", 2.0);
  if (!(c.t_max > 0.0)) rd.fail("scheme.t_max", "final time must be positive");
  c.eta = rd.real("scheme.eta", 0.0);
  if (c.eta < 0.0) rd.fail("scheme.eta", "must be >= 0 (0 selects the default)");
  c.rho = rd.real("scheme.rho", 0.0);
  if (c.rho < 0.0) rd.fail("scheme.rho", "must be >= 0 (0 selects the policy)");
  c.jitter = rd.real("scheme.jitter", 1e-9);
  if (c.jitter < 0.0) rd.fail("scheme.jitter", "must be >= 0");
  const long long budget = rd.integer("scheme.budget", 10'000'000);
  if (budget < 1) rd.fail("scheme.budget", "must be positive");
  c.budget = static_cast<std::uint64_t>(budget);
  c.v_min = rd.real("scheme.v_min", 0.0);
  c.output_times = rd.reals("scheme.output_times");
  for (double t : c.output_times) {
    if (t < 0.0) rd.fail("scheme.output_times", "times must be non-negative");
  }

  c.out_dir = rd.raw("output.dir").value_or("");
  if (const auto tables = rd.raw("output.tables")) {
    static const std::set<std::string> known{"events", "fronts", "functionals", "profiles", "summary"};
    c.tables.clear();
    std::istringstream in2(*tables);
    std::string item;
    while (std::getline(in2, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (!known.count(item)) rd.fail("output.tables", "unknown table '" + item + "'");
      c.tables.push_back(item);
    }
  }
  rd.reject_unknown();
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open configuration file", 0, "");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

std::string config_hash(const Config& cfg) {
  boost::crc_32_type crc;
  crc.process_bytes(cfg.text.data(), cfg.text.size());
  std::ostringstream os;
  os << std::hex;
  os.width(8);
  os.fill('0');
  os << crc.checksum();
  return os.str();
}

Profile random_profile(const PhasePair& phases, std::uint64_t seed, int pieces, double tv,
                       double x_min, double x_max) {
  if (pieces < 1) throw DomainError("random_profile: need at least one jump");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x_min, x_max);
  std::uniform_real_distribution<double> uj(-1.0, 1.0);
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < pieces) {
    const double x = ux(rng);
    if (x != 0.0 && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> dlp(xs.size()), du(xs.size());
  double raw = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    dlp[k] = uj(rng);
    du[k] = uj(rng);
    raw += std::abs(dlp[k]) + std::abs(du[k]) / phases.a_min();
  }
  const double scale = raw > 0.0 ? tv / raw : 0.0;

  std::vector<double> lp{0.0}, u{0.0};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    lp.push_back(lp.back() + scale * dlp[k]);
    u.push_back(u.back() + scale * du[k]);
  }
  // Insert the interface as a break carrying no jump in p or u.
  const auto it = std::lower_bound(xs.begin(), xs.end(), 0.0);
  const auto pos = static_cast<std::size_t>(it - xs.begin());
  xs.insert(it, 0.0);
  lp.insert(lp.begin() + static_cast<std::ptrdiff_t>(pos), lp[pos]);
  u.insert(u.begin() + static_cast<std::ptrdiff_t>(pos), u[pos]);

  Profile p;
  p.breaks = xs;
  p.u = u;
  p.v.resize(lp.size());
  for (std::size_t k = 0; k < lp.size(); ++k) {
    const bool left = k < xs.size() && xs[k] <= 0.0;
    const double a = left ? phases.a_l : phases.a_r;
    p.v[k] = a * a / std::exp(lp[k]);
  }
  return p;
}

InitialData make_initial_data(const Config& c) {
  const PhasePair ph = c.phases;
  switch (c.kind) {
    case DataKind::Riemann: {
      Profile p;
      p.breaks = {c.x0};
      p.v = {c.v_l, c.v_r};
      p.u = {c.u_l, c.u_r};
      return InitialData::piecewise(std::move(p));
    }
    case DataKind::NWave: {
      const double lp0 = std::log(c.p0);
      auto f = [=](double x) {
        const double s = (x - c.center) / c.width;
        const double n = std::abs(s) < 1.0 ? s : 0.0;
        const double a = x < 0.0 ? ph.a_l : ph.a_r;
        return std::pair<double, double>{a * a / std::exp(lp0 + c.amp_logp * n), c.u0 + c.amp_u * n};
      };
      const double lo = std::min(c.center - c.width, 0.0) - 0.125 * c.width;
      const double hi = std::max(c.center + c.width, 0.0) + 0.125 * c.width;
      return InitialData::sampled(f, lo, hi);
    }
    case DataKind::Random:
      return InitialData::piecewise(random_profile(ph, c.seed, c.pieces, c.tv, c.x_min, c.x_max));
    case DataKind::Table: {
      Profile p;
      for (std::size_t k = 0; k < c.table.size(); ++k) {
        if (k > 0) p.breaks.push_back(c.table[k][0]);
        p.v.push_back(c.table[k][1]);
        p.u.push_back(c.table[k][2]);
      }
      if (p.breaks.empty()) {
        p.breaks.push_back(0.0);
        p.v.push_back(p.v.back());
        p.u.push_back(p.u.back());
      }
      return InitialData::piecewise(std::move(p));
    }
  }
  throw DomainError("unknown data kind");
}

}  // namespace ptrack::scenario
