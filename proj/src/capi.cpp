#include "ptrack/ptrack.h"

#include <exception>
#include <string>

#include "ptrack/app.hpp"
#include "ptrack/eos.hpp"
#include "ptrack/error.hpp"
#include "ptrack/params.hpp"
#include "ptrack/riemann.hpp"

struct ptrack_config {
  ptrack::scenario::Config cfg;
};

struct ptrack_report {
  ptrack::app::Report report;
  std::string json;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

ptrack_status fail(ptrack_status s, const std::string& msg, int line = 0) {
  g_error = msg;
  g_error_line = line;
  return s;
}

// Maps exceptions from the C++ core onto status codes.
template <class F>
ptrack_status guarded(F&& f) {
  g_error.clear();
  g_error_line = 0;
  try {
    return f();
  } catch (const ptrack::ParseError& e) {
    return fail(PTRACK_ERR_PARSE, e.what(), e.line());
  } catch (const ptrack::UsageError& e) {
    return fail(PTRACK_ERR_USAGE, e.what());
  } catch (const ptrack::DomainError& e) {
    return fail(PTRACK_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(PTRACK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PTRACK_ERR_INTERNAL, "unknown failure");
  }
}

ptrack_status deliver(ptrack::app::Report&& rep, ptrack_report** out) {
  auto* r = new ptrack_report{std::move(rep), {}};
  r->json = r->report.doc.dump(2);
  const ptrack_status s = r->report.outcome == 0 ? PTRACK_OK : PTRACK_NEGATIVE;
  *out = r;
  return s;
}

std::string dir_or_empty(const char* s) { return s == nullptr ? std::string() : std::string(s); }

}  // namespace

extern "C" {

const char* ptrack_version(void) { return PTRACK_VERSION; }
const char* ptrack_last_error(void) { return g_error.c_str(); }
int ptrack_last_error_line(void) { return g_error_line; }

int ptrack_exit_code(ptrack_status status) {
  switch (status) {
    case PTRACK_OK: return 0;
    case PTRACK_NEGATIVE: return 1;
    case PTRACK_ERR_USAGE:
    case PTRACK_ERR_PARSE: return 2;
    default: return 3;
  }
}

ptrack_status ptrack_config_load(const char* path, ptrack_config** out) {
  if (path == nullptr || out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ptrack_config{ptrack::scenario::load_config(path)};
    return PTRACK_OK;
  });
}

ptrack_status ptrack_config_parse(const char* text, ptrack_config** out) {
  if (text == nullptr || out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ptrack_config{ptrack::scenario::parse_config(text)};
    return PTRACK_OK;
  });
}

void ptrack_config_free(ptrack_config* cfg) { delete cfg; }

ptrack_status ptrack_config_set_seed(ptrack_config* cfg, uint64_t seed) {
  if (cfg == nullptr) return fail(PTRACK_ERR_USAGE, "null config");
  cfg->cfg.seed = seed;
  return PTRACK_OK;
}

ptrack_status ptrack_check(const ptrack_config* cfg, const char* out_dir, ptrack_report** out) {
  if (cfg == nullptr || out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto dir = ptrack::app::resolve_out_dir(dir_or_empty(out_dir), &cfg->cfg);
    return deliver(ptrack::app::check(cfg->cfg, dir), out);
  });
}

ptrack_status ptrack_run(const ptrack_config* cfg, const char* out_dir, int force, ptrack_report** out) {
  if (cfg == nullptr || out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto dir = ptrack::app::resolve_out_dir(dir_or_empty(out_dir), &cfg->cfg);
    return deliver(ptrack::app::run(cfg->cfg, dir, force != 0), out);
  });
}

ptrack_status ptrack_converge(const ptrack_config* cfg, const int* nus, size_t n_nus,
                              const char* out_dir, int force, ptrack_report** out) {
  if (cfg == nullptr || out == nullptr || (nus == nullptr && n_nus > 0)) {
    return fail(PTRACK_ERR_USAGE, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const auto dir = ptrack::app::resolve_out_dir(dir_or_empty(out_dir), &cfg->cfg);
    const std::vector<int> list(nus, nus + n_nus);
    return deliver(ptrack::app::converge(cfg->cfg, list, dir, force != 0), out);
  });
}

ptrack_status ptrack_verify(const char* suite, int grid, uint64_t seed, const char* out_dir,
                            ptrack_report** out) {
  if (suite == nullptr || out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto dir = ptrack::app::resolve_out_dir(dir_or_empty(out_dir), nullptr, false);
    return deliver(ptrack::app::verify(suite, grid, seed, dir), out);
  });
}

ptrack_status ptrack_report_outcome(const ptrack_report* r) {
  if (r == nullptr) return fail(PTRACK_ERR_USAGE, "null report");
  return r->report.outcome == 0 ? PTRACK_OK : PTRACK_NEGATIVE;
}
const char* ptrack_report_text(const ptrack_report* r) { return r ? r->report.text.c_str() : ""; }
const char* ptrack_report_json(const ptrack_report* r) { return r ? r->json.c_str() : ""; }
size_t ptrack_report_artifact_count(const ptrack_report* r) { return r ? r->report.artifacts.size() : 0; }
const char* ptrack_report_artifact(const ptrack_report* r, size_t k) {
  if (r == nullptr || k >= r->report.artifacts.size()) return nullptr;
  return r->report.artifacts[k].c_str();
}
void ptrack_report_free(ptrack_report* r) { delete r; }

ptrack_status ptrack_k_threshold(double r, double* out) {
  if (out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = ptrack::params::k_threshold(r);
    return PTRACK_OK;
  });
}

ptrack_status ptrack_c_damp(double z, double* out) {
  if (out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = ptrack::eos::c_damp(z);
    return PTRACK_OK;
  });
}

ptrack_status ptrack_solve_lax(double v_l, double u_l, double v_r, double u_r, double a_l,
                               double a_r, double out[3]) {
  if (out == nullptr) return fail(PTRACK_ERR_USAGE, "null argument");
  return guarded([&] {
    const auto fan = ptrack::riemann::solve_lax({v_l, u_l, 0.0}, {v_r, u_r, 1.0}, a_l, a_r);
    out[0] = fan.eps1;
    out[1] = fan.eps3;
    out[2] = fan.max_residual();
    return PTRACK_OK;
  });
}

}  // extern "C"
