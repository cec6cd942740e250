// Command-line front end over the C interface.
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptrack/ptrack.h"

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string nu;
  std::string suite = "all";
  std::uint64_t seed = 1;
  bool seed_given = false;
  bool force = false;
  int grid = 0;
};

int report_error(ptrack_status s) {
  std::fprintf(stderr, "ptrack: %s\n", ptrack_last_error());
  return ptrack_exit_code(s);
}

// Prints the report and returns the exit class of its outcome.
int finish(ptrack_status s, ptrack_report* r) {
  if (r == nullptr) return report_error(s);
  std::fputs(ptrack_report_text(r), stdout);
  ptrack_report_free(r);
  return ptrack_exit_code(s);
}

std::vector<int> parse_nu_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Front tracking for a two-phase p-system with a phase interface"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ptrack_version());
  Flags f;

  auto common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", f.config, "configuration file");
    if (needs_config) c->required()->check(CLI::ExistingFile);
    sub->add_option("--out", f.out, "output directory (else $PTRACK_OUT_DIR)");
    sub->add_option("--seed", f.seed, "seed for random data and sweeps")
        ->each([&](const std::string&) { f.seed_given = true; });
    sub->add_flag("--force", f.force, "run inadmissible data with warn-only monitors");
  };
  auto* check = app.add_subcommand("check", "admissibility of the initial data");
  common(check, true);
  auto* run = app.add_subcommand("run", "front-tracking run with table output");
  common(run, true);
  auto* conv = app.add_subcommand("converge", "ladder of runs over nu");
  common(conv, true);
  conv->add_option("--nu", f.nu, "strictly increasing comma-separated list, e.g. 4,8,16");
  auto* verify = app.add_subcommand("verify", "oracle sweeps");
  common(verify, false);
  verify->add_option("suite", f.suite, "lemma53, identities, pseudo-estimates, schochet, k-threshold or all");
  verify->add_option("--grid", f.grid, "points per axis (0 = default)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    ptrack_report* r = nullptr;
    const ptrack_status s =
        ptrack_verify(f.suite.c_str(), f.grid, f.seed, f.out.empty() ? nullptr : f.out.c_str(), &r);
    return finish(s, r);
  }

  ptrack_config* cfg = nullptr;
  ptrack_status s = ptrack_config_load(f.config.c_str(), &cfg);
  if (s != PTRACK_OK) return report_error(s);
  if (f.seed_given) ptrack_config_set_seed(cfg, f.seed);
  const char* out = f.out.empty() ? nullptr : f.out.c_str();

  ptrack_report* r = nullptr;
  if (check->parsed()) {
    s = ptrack_check(cfg, out, &r);
  } else if (run->parsed()) {
    s = ptrack_run(cfg, out, f.force ? 1 : 0, &r);
  } else {
    std::vector<int> nus;
    try {
      nus = parse_nu_list(f.nu);
    } catch (const std::exception&) {
      ptrack_config_free(cfg);
      std::fprintf(stderr, "ptrack: --nu expects comma-separated integers, got '%s'\n", f.nu.c_str());
      return 2;
    }
    s = ptrack_converge(cfg, nus.data(), nus.size(), out, f.force ? 1 : 0, &r);
  }
  ptrack_config_free(cfg);
  return finish(s, r);
}
