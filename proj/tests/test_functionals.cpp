#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ptrack/eos.hpp"
#include "ptrack/functionals.hpp"
#include "ptrack/params.hpp"
#include "support.hpp"

using namespace ptrack;
using namespace ptrack::functionals;

namespace {

params::ParameterSet toy_params() {
  params::ParameterSet ps;
  ps.delta2 = 0.5;
  ps.m = 2.0;
  ps.xi = 1.8;
  ps.K = 1.2;
  ps.K_np = 0.1;
  ps.C_o = 3.0;
  ps.mu = 0.9;
  return ps;
}

Front wave(Family f, double eps, Side side, int order = 1) {
  Front w;
  w.family = f;
  w.strength = eps;
  w.side = side;
  w.order = order;
  return w;
}

Front composite(double d20) {
  Front c;
  c.family = Family::Composite;
  c.strength = d20;
  return c;
}

}  // namespace

TEST_CASE("weights: rarefactions count once, shocks xi times") {
  const auto ps = toy_params();
  CHECK(contribution(wave(Family::One, 0.2, Side::Left), ps).L == doctest::Approx(0.2));
  CHECK(contribution(wave(Family::One, -0.2, Side::Left), ps).L == doctest::Approx(0.36));
  CHECK(contribution(composite(0.3), ps).L == 0.0);
}

TEST_CASE("approaching waves: 1-waves right of the interface and 3-waves left of it") {
  const auto ps = toy_params();
  CHECK(contribution(wave(Family::One, 0.1, Side::Right), ps).V == doctest::Approx(0.1));
  CHECK(contribution(wave(Family::One, 0.1, Side::Left), ps).V == 0.0);
  CHECK(contribution(wave(Family::Three, -0.1, Side::Left), ps).V == doctest::Approx(0.18));
  CHECK(contribution(wave(Family::Three, -0.1, Side::Right), ps).V == 0.0);
}

TEST_CASE("snapshot of a hand-built front list") {
  const auto ps = toy_params();
  const FrontList fs{wave(Family::One, -0.1, Side::Left), wave(Family::Three, 0.2, Side::Left, 2),
                     composite(-0.05), wave(Family::One, -0.3, Side::Right, 3),
                     wave(Family::Three, 0.4, Side::Right)};
  const auto s = snapshot(fs, ps, 1.5);
  const double L = 1.8 * 0.1 + 0.2 + 1.8 * 0.3 + 0.4 + 0.1 * 0.05;
  const double V = 0.2 + 1.8 * 0.3;
  CHECK(s.t == 1.5);
  CHECK(s.L == doctest::Approx(L).epsilon(1e-15));
  CHECK(s.V == doctest::Approx(V).epsilon(1e-15));
  CHECK(s.Q == doctest::Approx(0.5 * V).epsilon(1e-15));
  CHECK(s.F == doctest::Approx(L + 1.2 * 0.5 * V).epsilon(1e-15));
  CHECK(s.Lbar == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.composite_abs == doctest::Approx(0.05));
  CHECK(s.max_strength == doctest::Approx(0.4));
  CHECK(s.max_order == 3);
}

TEST_CASE("per-order values split F by generation and include non-physical production") {
  const auto ps = toy_params();
  GenerationLedger led(ps);
  const FrontList fs{wave(Family::One, -0.1, Side::Left), wave(Family::Three, 0.2, Side::Left, 2),
                     composite(0.0), wave(Family::One, 0.3, Side::Right, 2)};
  led.start(fs);
  CHECK(led.F1_initial() == doctest::Approx(0.18));
  led.add_nonphysical(3, 0.02);
  led.add_nonphysical(3, -0.01);
  CHECK(led.L0_total() == doctest::Approx(0.03));
  const auto ov = led.evaluate(fs);
  CHECK(ov.F_at(1) == doctest::Approx(0.18));
  CHECK(ov.F_at(2) == doctest::Approx(0.2 + 0.3 + 1.2 * 0.5 * 0.5));
  CHECK(ov.F_at(3) == doctest::Approx(0.1 * 0.03));
  CHECK(ov.tail(2) == doctest::Approx(ov.F_at(2) + ov.F_at(3)));
  CHECK(ov.sum_F() == doctest::Approx(ov.F_at(1) + ov.tail(2)));
}

TEST_CASE("local change across an event equals the change of snapshots (property)") {
  const auto ps = toy_params();
  testing::Gen g(51);
  for (int k = 0; k < 500; ++k) {
    FrontList before, after;
    auto rnd = [&] {
      const Family f = g.coin() ? Family::One : Family::Three;
      return wave(f, g.uniform(-0.5, 0.5), g.coin() ? Side::Left : Side::Right, g.integer(1, 4));
    };
    const FrontList rest{rnd(), rnd(), composite(g.uniform(-0.1, 0.1))};
    const std::vector<Front> in{rnd(), rnd()};
    const std::vector<Front> out{rnd(), rnd(), rnd()};
    before = rest;
    before.insert(before.end(), in.begin(), in.end());
    after = rest;
    after.insert(after.end(), out.begin(), out.end());
    const auto d = local_delta(in, out, 0, 0.0, ps);
    CHECK(d.total == doctest::Approx(snapshot(after, ps).F - snapshot(before, ps).F).epsilon(1e-12).scale(1.0));
    GenerationLedger led(ps);
    const auto ob = led.evaluate(before);
    const auto oa = led.evaluate(after);
    for (std::size_t j = 1; j < 6; ++j) {
      CHECK(d.at(j) == doctest::Approx(oa.F_at(j) - ob.F_at(j)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("non-physical production enters the composite order only") {
  const auto ps = toy_params();
  const auto d = local_delta({wave(Family::One, 0.1, Side::Right, 2), composite(0.0)},
                             {composite(0.05), wave(Family::One, 0.1, Side::Left, 2)}, 3, 0.05, ps);
  CHECK(d.at(3) == doctest::Approx(0.1 * 0.05));
  CHECK(d.at(2) == doctest::Approx(-1.2 * 0.5 * 0.1));
  CHECK(d.total == doctest::Approx(0.1 * 0.05 - 1.2 * 0.5 * 0.1));
}

TEST_CASE("generation laws on synthetic changes") {
  Classification cls{EventSet::I, 2, 1, false};
  DeltaF d;
  d.per_order = {0.0, 0.0, -1.0, 0.5, 0.0};
  for (const auto& a : check_generation_laws(d, cls, 0.6)) CHECK_MESSAGE(a.ok, a.name);
  d.per_order = {0.0, 0.0, -1.0, 0.7, 0.0};
  bool bound_failed = false;
  for (const auto& a : check_generation_laws(d, cls, 0.6)) bound_failed = bound_failed || !a.ok;
  CHECK(bound_failed);
  d.per_order = {0.0, 0.0, -1.0, 0.5, 0.01};
  CHECK_FALSE(check_generation_laws(d, cls, 0.6)[0].ok);

  Classification none;
  DeltaF z;
  z.per_order = {0.0, 1e-3};
  CHECK_FALSE(check_generation_laws(z, none, 0.6)[0].ok);
  CHECK(none.label() == "cross");
  CHECK(cls.label() == "I_2 (T_2;1)");
  CHECK(Classification{EventSet::J, 3, 3, true}.label() == "J_3 simplified");
}

TEST_CASE("strengthened decrease: literal versus corrected form") {
  // Mixed-order merge: order 2 loses 1, order 1 gains 0.9, order 3 gains 0.05.
  Classification cls{EventSet::I, 2, 1, false};
  DeltaF d;
  d.per_order = {0.0, 0.9, -1.0, 0.05};
  d.total = -0.05;
  const double mu = 0.5;
  const auto lit = check_strengthened_decrease(d, cls, mu);
  const auto cor = check_corrected_decrease(d, cls, mu);
  CHECK(lit.rhs == doctest::Approx(-0.5));
  CHECK_FALSE(lit.ok);
  CHECK(cor.rhs == doctest::Approx(-0.5 * (1.0 - 0.9)));
  CHECK(cor.ok);
}

TEST_CASE("tail decay check") {
  OrderValues ov;
  ov.resize(4);
  ov.F = {0.0, 1.0, 0.4, 0.1};
  CHECK(check_tail_decay(ov, 1.0, 0.5).ok);
  ov.F = {0.0, 1.0, 0.4, 0.2};
  CHECK_FALSE(check_tail_decay(ov, 1.0, 0.5).ok);
}

TEST_CASE("half variation of log pressure uses the phase of each side") {
  const PhasePair ph = PhasePair::make(0.0, 1.0, 1.0, 2.0);
  Front c = composite(0.0);
  c.left = State{1.0, 0.0, 0.0};
  c.right = State{4.0, 0.0, 1.0};
  CHECK(half_tv_log_pressure({c}, ph) == doctest::Approx(0.0).scale(1.0));
  Front w = wave(Family::One, -0.2, Side::Left);
  w.left = State{1.0, 0.0, 0.0};
  w.right = eos::apply_wave(w.left, Family::One, -0.2, 1.0);
  CHECK(half_tv_log_pressure({w}, ph) == doctest::Approx(0.2));
}
