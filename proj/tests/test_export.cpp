#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ptrack/export.hpp"
#include "ptrack/params.hpp"
#include "ptrack/scenario.hpp"
#include "ptrack/tracker.hpp"
#include "support.hpp"

using namespace ptrack;

namespace {

tracker::Trajectory sample_run() {
  tracker::SimulationConfig c;
  c.phases = PhasePair::make(0.0, 1.0, 1.0, 1.4);
  const Profile p = scenario::random_profile(c.phases, 3, 8, 0.4, -1.0, 1.0);
  c.initial_data = InitialData::piecewise(p);
  c.params = *params::check_initial_data(p, c.phases).parameters;
  c.t_max = 2.0;
  c.output_times = {1.0};
  return tracker::run_with_rho_policy(c);
}

const io::Provenance kProv{"test", "deadbeef", 42};

}  // namespace

TEST_CASE("numbers round-trip through their text form (property)") {
  testing::Gen g(91);
  for (int k = 0; k < 10000; ++k) {
    const double x = g.uniform(-1, 1) * std::pow(10.0, g.integer(-300, 300));
    CHECK(std::strtod(io::fmt(x).c_str(), nullptr) == x);
  }
  CHECK(io::fmt(0.1) == "0.10000000000000001");
}

TEST_CASE("tables re-parse with provenance and exact values") {
  const auto tr = sample_run();
  REQUIRE(tr.event_count > 0);

  std::stringstream ev;
  io::write_events(ev, tr, kProv);
  const auto et = io::read_table(ev);
  CHECK(et.comments.size() == 4);
  CHECK(et.comments[2] == "# config_hash deadbeef");
  CHECK(et.comments[3] == "# seed 42");
  REQUIRE(et.rows.size() == tr.events.size());
  for (std::size_t k = 0; k < et.rows.size(); ++k) {
    CHECK(et.number(k, "time") == tr.events[k].time);
    CHECK(et.number(k, "dF") == tr.events[k].delta.total);
    CHECK(et.number(k, "in1_strength") == tr.events[k].incoming[0].strength);
  }

  std::stringstream fr;
  io::write_fronts(fr, tr, kProv);
  const auto ft = io::read_table(fr);
  CHECK(ft.rows.size() == tr.timeline.size());
  for (std::size_t k = 0; k < ft.rows.size(); ++k) {
    CHECK(ft.number(k, "t_end") >= ft.number(k, "t_start"));
    CHECK(ft.number(k, "t_end") <= tr.t_end);
  }

  std::stringstream fu;
  io::write_functionals(fu, tr, kProv);
  const auto fut = io::read_table(fu);
  REQUIRE(fut.rows.size() == tr.series.size());
  for (std::size_t k = 1; k < fut.rows.size(); ++k) {
    CHECK(fut.number(k, "F") <= fut.number(k - 1, "F") + 1e-10);
  }

  std::stringstream pr;
  io::write_profiles(pr, tr.profiles, kProv);
  const auto pt = io::read_table(pr);
  CHECK(pt.rows.size() == tr.profiles.at(0).second.cells());
  CHECK(std::isinf(pt.number(0, "x_left")));
}

TEST_CASE("identical runs write byte-identical event tables") {
  std::stringstream a, b;
  io::write_events(a, sample_run(), kProv);
  io::write_events(b, sample_run(), kProv);
  CHECK(a.str() == b.str());
}

TEST_CASE("malformed tables are rejected") {
  std::stringstream s("# c\na,b\n1,2\n3\n");
  CHECK_THROWS(io::read_table(s));
  std::stringstream empty("");
  CHECK_THROWS(io::read_table(empty));
  std::stringstream ok("a,b\n1,2\n");
  const auto t = io::read_table(ok);
  CHECK(t.number(0, "b") == 2.0);
  CHECK_THROWS_AS(t.column("c"), std::out_of_range);
}
