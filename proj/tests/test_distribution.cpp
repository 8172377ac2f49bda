#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/transform.hpp"

using namespace wdst;
constexpr double pi = std::numbers::pi;

namespace {

Grid line(std::size_t n = 1024, double length = 40.0) {
  return Grid({centered_axis(AxisKind::space, n, length / static_cast<double>(n))});
}

}  // namespace

TEST_CASE("distributions validate their samples") {
  const Grid g = line(8);
  CHECK_THROWS_AS(WaveDistribution(g, std::vector<cplx>(7)), std::invalid_argument);
  std::vector<cplx> bad(8);
  bad[3] = {NAN, 0.0};
  CHECK_THROWS_AS(WaveDistribution(g, bad), std::invalid_argument);
  CHECK(WaveDistribution(g).norm_sq() == 0.0);
}

TEST_CASE("coordinate intervals need a finite pair") {
  CHECK_THROWS_AS(CoordinateInterval(0, std::nullopt, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(CoordinateInterval::event(INFINITY, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CoordinateInterval::momentum(1.0, NAN), std::invalid_argument);
  const auto e = CoordinateInterval::event(1.0, 2.0, 4);
  CHECK(e.index() == 4);
  CHECK(e.spacetime().t == 2.0);
  CHECK_THROWS_AS(e.momentum(), std::logic_error);
}

TEST_CASE("centered unit Gaussian is real, positive, peaked at 0 with density variance 1/2") {
  const Grid g = line();
  const auto psi = gaussian_packet(g, CoordinateInterval::event(0.0, 0.0), 0.0, 0.0, 1.0);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  std::size_t peak = 0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    CHECK(psi[j].imag() == 0.0);
    CHECK(psi[j].real() >= 0.0);
    if (std::abs(psi[j]) > std::abs(psi[peak])) peak = j;
  }
  CHECK(g.axis(0).value(peak) == 0.0);
  const auto m = moments(psi, 0);
  CHECK(std::abs(m.mean) < 1e-14);
  CHECK(m.variance == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a carrier k0 moves the transform peak to the nearest bin") {
  const Grid g = line();
  const auto F = forward(gaussian_packet(g, CoordinateInterval::event(0.0, 0.0), 2.0, 0.0, 1.0), AxesMask::all(g));
  std::size_t best = 0;
  for (std::size_t m = 0; m < F.size(); ++m)
    if (std::abs(F[m]) > std::abs(F[best])) best = m;
  CHECK(std::abs(F.grid().axis(0).value(best) - 2.0) <= 0.5 * F.grid().axis(0).step);
}

TEST_CASE("plane waves have constant modulus and a single bin when commensurate") {
  const Grid g = make_spacetime_grid({centered_axis(AxisKind::space, 16, 0.5), centered_axis(AxisKind::time, 8, 0.5)});
  const auto flat = plane_wave(g, 0.0, 0.0);
  for (std::size_t i = 0; i < flat.size(); ++i) CHECK(flat[i] == flat[0]);
  const auto d = dual_of(g);
  const auto pw = plane_wave(g, 2 * d.axis(0).step, 3 * d.axis(1).step);
  for (std::size_t i = 0; i < pw.size(); ++i) CHECK(std::abs(pw[i]) == doctest::Approx(std::abs(pw[0])).epsilon(1e-14));
  const auto F = forward(pw, AxesMask::all(g));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < F.size(); ++i) nonzero += std::abs(F[i]) > 1e-12;
  CHECK(nonzero == 1);
}

TEST_CASE("Gaussian and plane wave agree where the envelope is flat") {
  const Grid g = make_spacetime_grid({centered_axis(AxisKind::space, 64, 0.25), centered_axis(AxisKind::time, 8, 0.5)});
  const auto gauss = gaussian_packet(g, CoordinateInterval::event(0.0, 0.0), 1.3, 0.7, 400.0);
  const auto pw = plane_wave(g, 1.3, 0.7);
  CHECK(oracle::max_abs_diff(std::vector<cplx>(gauss.samples().begin(), gauss.samples().end()), pw.samples()) < 1e-5);
}

TEST_CASE("box momentum state: literal amplitude, real at x_c = 0 and tau = 0") {
  const double L = 2.0;
  const Grid dual({AxisSpec{AxisKind::wavenumber, 64, pi / (2.0 * L), 0.0}});
  const auto psi = box_momentum_state(L, 0.0, 1.0, 0.0, dual);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  // bin 2 sits at kL = pi, where sinc(0) = 1.
  const auto& ax = dual.axis(0);
  REQUIRE(ax.value(2) * L == doctest::Approx(pi));
  double ratio_ref = 0.0;
  for (std::size_t m = 0; m < 64; ++m) {
    CHECK(std::abs(psi[m].imag()) < 1e-15);
    const double kl = ax.value(m) * L;
    const double h = 0.5 * (pi - kl);
    const double amp = (h == 0.0 ? 1.0 : std::sin(h) / h) / (1.0 + kl);
    if (m == 2) ratio_ref = psi[m].real() / amp;
    if (m > 2 && std::abs(amp) > 1e-3) CHECK(psi[m].real() / amp == doctest::Approx(ratio_ref).epsilon(1e-12));
  }
  CHECK(std::abs(psi[2].real()) / ratio_ref == doctest::Approx(1.0 / (1.0 + pi)));
}

TEST_CASE("box momentum state global phase is unit modulus and the pole is rejected") {
  const double L = 1.0;
  const Grid dual({AxisSpec{AxisKind::wavenumber, 32, 0.3, 0.0}});
  const auto a = box_momentum_state(L, 0.3, 2.0, 0.0, dual);
  const auto b = box_momentum_state(L, 0.3, 2.0, 5.7, dual);
  CHECK(b.norm_sq() == doctest::Approx(1.0));
  const auto fit = fit_global_phase(a, b);
  CHECK(fit.mismatch < 1e-14);
  CHECK(fit.phase == doctest::Approx(wrap_phase(-2.0 * 5.7)));
  // a bin at k = -1/L
  const Grid pole({AxisSpec{AxisKind::wavenumber, 8, 0.25, 0.0}});
  CHECK_THROWS_AS(box_momentum_state(4.0, 0.0, 1.0, 0.0, pole), std::domain_error);
}

TEST_CASE("moments of impulses") {
  const Grid g = line(64, 16.0);
  const auto d = unit_impulse(g, {3.0});
  CHECK(moments(d, 0).mean == doctest::Approx(3.0));
  CHECK(moments(d, 0).variance == doctest::Approx(0.0));
  auto two = unit_impulse(g, {-2.0});
  const auto other = unit_impulse(g, {2.0});
  for (std::size_t i = 0; i < two.size(); ++i) two[i] += other[i];
  CHECK(std::abs(moments(two, 0).mean) < 1e-14);
  CHECK(moments(two, 0).variance == doctest::Approx(4.0));
  CHECK_THROWS_AS(moments(WaveDistribution(g), 0), std::domain_error);
}

TEST_CASE("moments are invariant under a global phase") {
  oracle::Gen gen(31);
  const Grid g = line(128, 20.0);
  auto a = WaveDistribution(g, gen.complex_vector(128));
  auto b = a;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] *= std::polar(1.0, 1.234);
  CHECK(moments(a, 0).mean == doctest::Approx(moments(b, 0).mean).epsilon(1e-13));
  CHECK(moments(a, 0).variance == doctest::Approx(moments(b, 0).variance).epsilon(1e-13));
}

TEST_CASE("Gaussian saturates the uncertainty bound, with or without a carrier") {
  const Grid g = line();
  const auto c = gaussian_packet(g, CoordinateInterval::event(0.0, 0.0), 0.0, 0.0, 1.0);
  CHECK(std::abs(uncertainty_product(c, 0) - 0.25) < 1e-6);
  const auto k = gaussian_packet(g, CoordinateInterval::event(0.0, 0.0), 3.0, 0.0, 1.0);
  CHECK(uncertainty_product(k, 0) == doctest::Approx(uncertainty_product(c, 0)).epsilon(1e-9));
  const auto wide = gaussian_packet(g, CoordinateInterval::event(1.5, 0.0), 0.0, 0.0, 2.0);
  CHECK(std::abs(uncertainty_product(wide, 0) - 0.25) < 1e-6);
}

TEST_CASE("wrap_phase maps into (-pi, pi]") {
  CHECK(wrap_phase(pi) == doctest::Approx(pi));
  CHECK(wrap_phase(-pi) == doctest::Approx(pi));
  CHECK(wrap_phase(3.0 * pi / 2.0) == doctest::Approx(-pi / 2.0));
  oracle::Gen gen(32);
  for (int i = 0; i < 200; ++i) {
    const double x = gen.uniform(-100.0, 100.0);
    const double w = wrap_phase(x);
    CHECK(w > -pi);
    CHECK(w <= pi);
    CHECK(std::abs(std::remainder(x - w, 2.0 * pi)) < 1e-12);
  }
}
