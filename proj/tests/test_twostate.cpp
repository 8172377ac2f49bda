#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wdst/error.hpp"
#include "wdst/twostate.hpp"

using namespace wdst;

namespace {

TwoLevelSystem drive(double v0, double omega_d) {
  TwoLevelSystem s;
  s.v0 = v0;
  s.omega_d = omega_d;
  return s;
}

// Closed form of the nested drive integral for the lower-level amplitude.
cplx second_order_exact(double v0, double dp, double tau) {
  const cplx i{0.0, 1.0};
  if (dp == 0.0) return -0.5 * v0 * v0 * tau * tau;
  return -v0 * v0 / (i * dp) * (tau - (1.0 - std::exp(-i * dp * tau)) / (i * dp));
}

}  // namespace

TEST_CASE("system validation") {
  TwoLevelSystem s;
  s.v0 = NAN;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  CHECK(drive(0.1, 1.3).detuning() == doctest::Approx(0.3));
  AmplitudePair p{cplx{1.0, 0.0}, cplx{0.0, 0.1}};
  CHECK(p.exceeds_unit_norm());
}

TEST_CASE("windowed drive: unit modulus on [0, tau] only, and its integral") {
  const double tau = 10.0, dt = 0.01;
  const AxisSpec time{AxisKind::time, 3001, dt, -tau};
  const auto sys = drive(0.01, 1.0);
  const auto w = windowed_potential(sys, tau, time);
  cplx integral{};
  for (std::size_t j = 0; j < time.n; ++j) {
    const double t = time.value(j);
    const bool inside = t >= -1e-12 && t <= tau + 1e-12;
    CHECK(std::abs(w[j]) == doctest::Approx(inside ? 0.01 : 0.0));
    const double wt = (std::abs(t) < 1e-9 || std::abs(t - tau) < 1e-9) ? 0.5 : 1.0;
    integral += wt * w[j] * dt;
  }
  const cplx i{0.0, 1.0};
  const cplx exact = 0.01 * (1.0 - std::exp(-i * tau)) / i;
  CHECK(std::abs(integral - exact) < 1e-6);
  CHECK_THROWS_AS(windowed_potential(sys, tau, AxisSpec{AxisKind::space, 8, 1.0, 0.0}), GridMismatch);
  CHECK_THROWS_AS(windowed_potential(sys, 0.0, time), std::invalid_argument);
}

TEST_CASE("first-order amplitude examples") {
  const auto res = first_order_amplitude(drive(0.01, 1.0), 10.0);
  CHECK(res.c1 == cplx{1.0, 0.0});
  CHECK(std::abs(res.c2 - cplx{0.0, -0.1}) < 1e-15);
  const double null = 1.0 + 2.0 * oracle::pi / 10.0;
  CHECK(std::abs(first_order_amplitude(drive(0.01, null), 10.0).c2) < 1e-15);
  const double d = 0.37;
  const auto off = first_order_amplitude(drive(0.02, 1.0 + d), 5.0);
  CHECK(std::norm(off.c2) == doctest::Approx(std::pow(0.02 * std::sin(d * 2.5) / (d / 2.0), 2)).epsilon(1e-12));
  CHECK(std::arg(off.c2 / cplx{0.0, -1.0}) == doctest::Approx(-d * 2.5));
  // Continuous through zero detuning.
  for (double tiny : {1e-9, 1e-6, 1e-5, 2e-4}) {
    const auto near = first_order_amplitude(drive(0.01, 1.0 + tiny), 10.0);
    CHECK(std::abs(near.c2 - res.c2) < 0.01 * 10.0 * tiny * 10.0);
  }
}

TEST_CASE("rk4 oracle: no drive, norm conservation and the exact rabi solution") {
  const auto idle = tdse_oracle(drive(0.0, 1.3), 10.0, 1e-3);
  CHECK(idle.c1 == cplx{1.0, 0.0});
  CHECK(idle.c2 == cplx{0.0, 0.0});
  oracle::Gen gen(71);
  for (int c = 0; c < 20; ++c) {
    const auto sys = drive(gen.uniform(0.0, 0.5), gen.uniform(0.0, 2.0));
    const double tau = gen.uniform(0.5, 20.0);
    const auto r = tdse_oracle(sys, tau, 1e-3);
    CHECK(std::abs(r.norm_sq() - 1.0) < 1e-10);
    CHECK(std::norm(r.c2) == doctest::Approx(oracle::rabi_power(sys.v0, sys.detuning(), tau)).epsilon(1e-8));
  }
}

TEST_CASE("step size guard") {
  try {
    tdse_oracle(drive(0.01, 1.0), 10.0, 0.5);
    FAIL("expected a guard");
  } catch (const GuardViolation& g) {
    CHECK(g.guard() == "step_size");
  }
  CHECK_NOTHROW(tdse_oracle(drive(0.01, 1.0), 10.0, 0.3));
}

TEST_CASE("first order departs from the exact amplitude at third order in V0 tau") {
  for (double det : {0.0, 0.3}) {
    double prev = 0.0;
    for (double v0 : {0.01, 0.005, 0.0025}) {
      const auto sys = drive(v0, 1.0 + det);
      const double err = std::abs(first_order_amplitude(sys, 10.0).c2 - tdse_oracle(sys, 10.0, 1e-3).c2);
      const double c = err / std::pow(v0 * 10.0, 3);
      CHECK(c < 1.0);
      if (prev > 0.0) CHECK(prev / err == doctest::Approx(8.0).epsilon(0.05));
      prev = err;
    }
  }
}

TEST_CASE("closed-form scan is the sinc line shape") {
  const auto sys = drive(0.01, 1.0);
  const auto prof = resonance_scan(sys, {0.0, 2.0, 0.01}, 10.0);
  REQUIRE(prof.omega_d.size() == 201);
  for (std::size_t i = 0; i < prof.omega_d.size(); ++i) {
    const double d = prof.omega_d[i] - 1.0;
    const double h = 0.5 * d * 10.0;
    const double sinc = h == 0.0 ? 1.0 : std::sin(h) / h;
    CHECK(std::abs(prof.power[i] - 0.01 * sinc * sinc) < 1e-12);
  }
  CHECK(prof.peak_omega == doctest::Approx(1.0));
  CHECK(std::abs(prof.null_below - (1.0 - 2.0 * oracle::pi / 10.0)) <= 0.01);
  CHECK(std::abs(prof.null_above - (1.0 + 2.0 * oracle::pi / 10.0)) <= 0.01);
}

TEST_CASE("line width scales as 1 / tau") {
  const auto sys = drive(0.001, 1.0);
  for (double tau : {10.0, 20.0, 40.0}) {
    const auto prof = resonance_scan(sys, {0.0, 3.0, 0.005}, tau);
    CHECK(std::abs(0.5 * (prof.null_above - prof.null_below) - 2.0 * oracle::pi / tau) <= 0.005);
  }
}

TEST_CASE("oracle scan agrees with the closed form and is reproducible across execution modes") {
  const auto sys = drive(0.01, 1.0);
  ScanOptions opts;
  opts.method = ScanMethod::oracle;
  const auto prof = resonance_scan(sys, {0.3, 1.7, 0.01}, 10.0, opts);
  CHECK(std::abs(prof.peak_omega - 1.0) <= 0.01);
  CHECK(std::abs(prof.null_below - (1.0 - 2.0 * oracle::pi / 10.0)) <= 0.01);
  CHECK(std::abs(prof.null_above - (1.0 + 2.0 * oracle::pi / 10.0)) <= 0.01);
  opts.parallel = false;
  const auto serial = resonance_scan(sys, {0.3, 1.7, 0.01}, 10.0, opts);
  CHECK(serial.power == prof.power);
}

TEST_CASE("scan edge cases") {
  const auto sys = drive(0.01, 1.0);
  CHECK_THROWS_AS(resonance_scan(sys, {1.0, 0.0, 0.01}, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(resonance_scan(sys, {0.0, 1.0, 0.0}, 10.0), std::invalid_argument);
  const auto single = resonance_scan(sys, {1.0, 1.0, 0.1}, 10.0);
  CHECK(single.omega_d.size() == 1);
  CHECK(std::isnan(single.null_below));
  CHECK(std::isnan(single.null_above));
}

TEST_CASE("second-order coefficient") {
  CHECK(second_order_coefficient(drive(0.0, 1.2), 10.0) == cplx{0.0, 0.0});
  oracle::Gen gen(72);
  for (int c = 0; c < 10; ++c) {
    const auto sys = drive(gen.uniform(0.001, 0.05), gen.uniform(0.0, 2.0));
    const double tau = gen.uniform(1.0, 20.0);
    const cplx exact = second_order_exact(sys.v0, -sys.detuning(), tau);
    CHECK(std::abs(second_order_coefficient(sys, tau) - exact) < 1e-6 * std::abs(exact));
    auto doubled = sys;
    doubled.v0 *= 2.0;
    CHECK(std::abs(second_order_coefficient(doubled, tau) - 4.0 * second_order_coefficient(sys, tau)) <
          1e-12 * std::abs(exact));
  }
  for (double v0 : {0.005, 0.01}) {
    for (double det : {0.0, 0.2}) {
      const auto sys = drive(v0, 1.0 + det);
      const cplx exact = tdse_oracle(sys, 10.0, 1e-3).c1 - 1.0;
      const cplx second = second_order_coefficient(sys, 10.0);
      CHECK(std::abs(second - exact) < 0.1 * std::abs(exact));
    }
  }
}
