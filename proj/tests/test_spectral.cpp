#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/spectral.hpp"

using namespace wdst;

namespace {

Grid line(std::size_t n, double length) { return Grid({centered_axis(AxisKind::space, n, length / static_cast<double>(n))}); }

std::string guard_of(auto&& fn) {
  try {
    fn();
  } catch (const GuardViolation& g) {
    return g.guard();
  }
  return {};
}

WaveDistribution plane(const Grid& g, double k) {
  std::vector<cplx> s(g.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::polar(1.0, k * g.axis(0).value(j));
  return normalized(WaveDistribution(g, s));
}

}  // namespace

TEST_CASE("free dispersion examples") {
  const double ks[] = {oracle::pi, 0.0};
  const auto r = extract_free_dispersion(0.1, 1.0, ks);
  REQUIRE(r.size() == 2);
  CHECK(r[0].label == oracle::pi);
  CHECK(r[0].omega == doctest::Approx(oracle::pi * oracle::pi / 2.0).epsilon(1e-12));
  CHECK(std::abs(r[1].omega) < 1e-15);
  const double one[] = {1.0};
  CHECK(extract_free_dispersion(0.3, 2.0, one)[0].omega == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("free dispersion matches k^2 / 2m for random modes") {
  oracle::Gen gen(61);
  for (int c = 0; c < 200; ++c) {
    const double mass = gen.uniform(0.2, 5.0);
    const double tau = gen.uniform(0.001, 0.5);
    const double kmax = std::sqrt(2.0 * mass * 0.95 * oracle::pi / tau);
    const double k[] = {gen.uniform(-kmax, kmax)};
    const auto r = extract_free_dispersion(tau, mass, k);
    CHECK(r[0].omega == doctest::Approx(k[0] * k[0] / (2.0 * mass)).epsilon(1e-10));
    CHECK(std::abs(r[0].residual) < 1e-10);
  }
}

TEST_CASE("phase wrap guard") {
  const double k[] = {1.0, oracle::pi};
  CHECK(guard_of([&] { extract_free_dispersion(1.0, 1.0, k); }) == "phase_wrap");
  CHECK_THROWS_AS(extract_free_dispersion(0.0, 1.0, k), std::invalid_argument);
}

TEST_CASE("phase residual vanishes on the dispersion relation and measures the offset otherwise") {
  const Grid g = line(64, 8.0 * oracle::pi);
  const auto psi = plane(g, 1.0);
  const auto v = Potential::zero(g);
  const double tau = 0.2;
  CHECK(std::abs(phase_residual(psi, 0.5, tau, v).residual) < 1e-12);
  const auto off = phase_residual(psi, 0.6, tau, v);
  CHECK(off.residual == doctest::Approx(0.1 * tau).epsilon(1e-9));
  CHECK(off.overlap_magnitude == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(off.not_an_eigenmode);

  // Cross-check: the residual of the extracted frequency is zero for any mode.
  oracle::Gen gen(62);
  for (int c = 0; c < 20; ++c) {
    const double k = 0.25 * static_cast<double>(gen.index(1, 12)) * gen.sign();
    const double ks[] = {k};
    const double w = extract_free_dispersion(tau, 1.0, ks)[0].omega;
    CHECK(std::abs(phase_residual(plane(g, k), w, tau, v).residual) < 1e-9);
  }
}

TEST_CASE("the harmonic ground state has zero residual at omega = 1/2") {
  const std::size_t n = 1024;
  const Grid g = line(n, 20.0);
  const auto v = Potential::harmonic(g, 1.0, 1.0);
  const auto ground = oracle::imaginary_time_ground_state(v.values(), g.axis(0).step, 1.0, 12.0);
  const auto r = phase_residual(WaveDistribution(g, ground), 0.5, 0.01, v);
  CHECK(std::abs(r.residual) < 1e-6);
  CHECK_FALSE(r.not_an_eigenmode);
}

TEST_CASE("a two-mode superposition is flagged as not an eigenmode") {
  const Grid g = line(64, 8.0 * oracle::pi);
  auto psi = plane(g, 1.0);
  const auto other = plane(g, 2.0);
  for (std::size_t j = 0; j < psi.size(); ++j) psi[j] += other[j];
  const auto r = phase_residual(psi, 1.0, 1.0, Potential::zero(g));
  CHECK(r.overlap_magnitude == doctest::Approx(std::cos(0.75)).epsilon(1e-9));
  CHECK(r.not_an_eigenmode);
}

TEST_CASE("spectrum guards") {
  const Grid g = line(256, 20.0);
  const auto probe = gaussian_packet(g, CoordinateInterval::event(1.0, 0.0), 0.0, 0.0, 1.0);
  CHECK(guard_of([&] { oscillator_spectrum(1.0, g, 10.0, 1000, probe); }) == "spectral_resolution");
  try {
    oscillator_spectrum(1.0, g, 10.0, 1000, probe);
  } catch (const GuardViolation& e) {
    CHECK(std::string(e.what()).find("12.56") != std::string::npos);
  }
  CHECK(guard_of([&] { oscillator_spectrum(1.0, g, 200.0, 100, probe); }) == "sampling_rate");
  CHECK_NOTHROW(oscillator_spectrum(1.0, g, 4.0 * oracle::pi, 400, probe));
}

TEST_CASE("oscillator levels and weights from a coherent-state probe") {
  const Grid g = line(512, 20.0);
  const auto probe = gaussian_packet(g, CoordinateInterval::event(std::sqrt(5.0), 0.0), 0.0, 0.0, 1.0);
  const double T = 200.0;
  const auto peaks = oscillator_spectrum(1.0, g, T, 4000, probe);
  REQUIRE(peaks.size() >= 5);
  const auto w = oracle::level_weights(probe, peaks.size(), 1.0, 1.0);
  const double wmax = *std::max_element(w.begin(), w.end());
  for (std::size_t n = 0; n < peaks.size(); ++n) {
    CHECK(peaks[n].label == static_cast<double>(n));
    CHECK(std::abs(peaks[n].omega - (static_cast<double>(n) + 0.5)) < 2.0 * oracle::pi / T);
    CHECK(std::abs(peaks[n].weight - w[n] / wmax) < 0.02);
  }
  // Weights rise to the mode |alpha|^2 = 2.5 and then decay.
  CHECK(peaks[0].weight < peaks[1].weight);
  CHECK(peaks[1].weight < peaks[2].weight);
  for (std::size_t n = 2; n + 1 < peaks.size(); ++n) CHECK(peaks[n + 1].weight < peaks[n].weight);
}

TEST_CASE("level spacing follows Omega") {
  const Grid g = line(512, 20.0);
  const double omega = 2.0;
  const auto probe =
      gaussian_packet(g, CoordinateInterval::event(std::sqrt(2.5), 0.0), 0.0, 0.0, 1.0 / std::sqrt(omega));
  const double T = 100.0;
  const auto peaks = oscillator_spectrum(omega, g, T, 4000, probe);
  REQUIRE(peaks.size() >= 4);
  CHECK(std::abs(peaks[3].omega - 7.0) < 2.0 * oracle::pi / T);
  for (std::size_t n = 0; n + 1 < peaks.size(); ++n)
    CHECK(std::abs(peaks[n + 1].omega - peaks[n].omega - omega) < 2.0 * oracle::pi / T);
}

TEST_CASE("tapered spectrum of a pure tone peaks at its frequency") {
  const double dt = 0.1, w0 = 1.7;
  std::vector<cplx> c(500);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = std::polar(1.0, -w0 * dt * static_cast<double>(j));
  const auto peaks = spectrum_peaks(c, dt, {});
  REQUIRE(peaks.size() == 1);
  CHECK(peaks[0].omega == doctest::Approx(w0).epsilon(1e-4));
  CHECK(peaks[0].weight == doctest::Approx(1.0).epsilon(1e-3));
  const auto s = tapered_spectrum(c, dt, {});
  CHECK(s.size() == 4096);
  CHECK(s.grid().axis(0).kind == AxisKind::angular_frequency);
  CHECK_THROWS_AS(tapered_spectrum(std::span<const cplx>(c).first(3), dt, {}), std::invalid_argument);
}
