#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wdst/cli/scenarios.hpp"
#include "wdst/diffraction.hpp"
#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

using namespace wdst;

namespace {

Grid line(std::size_t n, double step) { return Grid({centered_axis(AxisKind::space, n, step)}); }

WaveDistribution random_state(const Grid& g, oracle::Gen& gen) { return WaveDistribution(g, gen.complex_vector(g.size())); }

}  // namespace

TEST_CASE("aperture construction and passivity") {
  const Grid g = line(16, 0.25);
  const auto open = Aperture::open(g);
  for (const auto& t : open.transmittance()) CHECK(t == cplx{1.0, 0.0});
  const auto slit = Aperture::slit(g, 1.0);
  double area = 0.0;
  for (std::size_t j = 0; j < 16; ++j) {
    const double x = g.axis(0).value(j);
    const double t = slit.transmittance()[j].real();
    if (std::abs(x) < 0.5) CHECK(t == 1.0);
    if (std::abs(std::abs(x) - 0.5) < 1e-12) CHECK(t == 0.5);
    if (std::abs(x) > 0.5 + 1e-12) CHECK(t == 0.0);
    area += t * g.axis(0).step;
  }
  CHECK(area == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Aperture::slit(g, 0.3).transmittance()[8].real() == doctest::Approx(0.3 / 0.25 > 1.0 ? 1.0 : 0.3 / 0.25));
  CHECK_THROWS_AS(Aperture(g, std::vector<cplx>(16, 1.1)), std::invalid_argument);
  CHECK_NOTHROW(Aperture(g, std::vector<cplx>(16, std::polar(1.0, 2.0))));
  CHECK_THROWS_AS(Aperture(g, std::vector<cplx>(15, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(Aperture(dual_of(g), std::vector<cplx>(16, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(Aperture::slit(g, 0.0), std::invalid_argument);

  const Potential v(g, std::vector<double>(16, 2.0));
  CHECK(std::abs(Aperture::phase(v, 0.5).transmittance()[3] - std::polar(1.0, -1.0)) < 1e-15);
}

TEST_CASE("fresnel transfer values") {
  const Grid dual = dual_of(line(32, 0.5));
  const auto identity = fresnel_transfer(dual, 0.0, 1.0);
  for (const auto& p : identity.values()) CHECK(p == cplx{1.0, 0.0});
  const auto p = fresnel_transfer(dual, 3.0, 2.0);
  for (std::size_t m = 0; m < 32; ++m) {
    const double k = dual.axis(0).value(m);
    CHECK(std::abs(p.values()[m] - std::polar(1.0, -k * k * 3.0 / 4.0)) < 1e-14);
  }
  CHECK_THROWS_AS(fresnel_transfer(dual, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Pupil(line(32, 0.5), std::vector<cplx>(32, 1.0)), std::invalid_argument);
}

TEST_CASE("fresnel propagation preserves power and matches the direct k-space sum") {
  oracle::Gen gen(81);
  const Grid g = line(512, 0.1);
  for (int c = 0; c < 5; ++c) {
    const auto field = random_state(g, gen);
    const double delta = gen.uniform(-5.0, 5.0), mass = gen.uniform(0.5, 2.0);
    const auto out = propagate_wavefront(field, fresnel_transfer(dual_of(g), delta, mass));
    CHECK(out.norm_sq() == doctest::Approx(field.norm_sq()).epsilon(1e-12));
    CHECK(oracle::max_abs_diff(oracle::direct_fresnel(field, delta, mass), out.samples()) < 1e-6);
  }
  const Grid g2({centered_axis(AxisKind::space, 32, 0.2), centered_axis(AxisKind::space, 16, 0.3)});
  const auto f2 = random_state(g2, gen);
  const auto o2 = propagate_wavefront(f2, fresnel_transfer(dual_of(g2), 1.5, 1.0));
  CHECK(o2.norm_sq() == doctest::Approx(f2.norm_sq()).epsilon(1e-12));
}

TEST_CASE("pupil multiplication equals convolution with its impulse") {
  oracle::Gen gen(82);
  const Grid g({centered_axis(AxisKind::space, 24, 0.5), centered_axis(AxisKind::space, 16, 0.25)});
  const auto field = random_state(g, gen);
  for (const auto& pupil : {fresnel_transfer(dual_of(g), 2.0, 1.0), Pupil::circular(dual_of(g), 4.0)}) {
    const auto h = impulse_from_pupil(pupil);
    const auto route = convolve(h, field, AxesMask::all(g));
    CHECK(kernels::max_abs_diff(route.samples(), propagate_wavefront(field, pupil).samples()) < 1e-10);
  }
  const Grid open_dual = dual_of(g);
  const auto delta = impulse_from_pupil(Pupil(open_dual, std::vector<cplx>(open_dual.size(), 1.0)));
  const auto unit = unit_impulse(g, {0.0, 0.0});
  CHECK(kernels::max_abs_diff(delta.samples(), unit.samples()) < 1e-14);
  CHECK_THROWS_AS(propagate_wavefront(field, fresnel_transfer(dual_of(line(24, 0.5)), 1.0, 1.0)), GridMismatch);
}

TEST_CASE("a linear-phase pupil translates the field") {
  const Grid g = line(64, 0.5);
  const std::size_t shift = 5;
  const double a = static_cast<double>(shift) * 0.5;
  const Grid dual = dual_of(g);
  std::vector<cplx> p(64);
  for (std::size_t m = 0; m < 64; ++m) p[m] = std::polar(1.0, -dual.axis(0).value(m) * a);
  const auto moved = propagate_wavefront(unit_impulse(g, {0.0}), Pupil(dual, p));
  CHECK(kernels::max_abs_diff(moved.samples(), unit_impulse(g, {a}).samples()) < 1e-13);
}

TEST_CASE("slit far field: first null at k = 2 pi / w, reciprocal in the width") {
  const Grid g = line(8192, 0.0625);
  std::vector<double> k;
  const Grid dual = dual_of(g);
  const auto centered = frequency_values(dual.axis(0), FrequencyLayout::centered);
  for (double width : {1.0, 0.5, 0.25}) {
    const auto spec = forward(apply_aperture(WaveDistribution(g, std::vector<cplx>(g.size(), 1.0)), Aperture::slit(g, width)),
                              AxesMask::all(g));
    std::vector<double> intensity(spec.size());
    const std::size_t half = spec.size() / 2;
    for (std::size_t i = 0; i < spec.size(); ++i) intensity[i] = std::norm(spec[(i + half) % spec.size()]);
    const double hw = cli::central_lobe_halfwidth(centered, intensity);
    CHECK(std::abs(hw - 2.0 * oracle::pi / width) <= dual.axis(0).step);
  }
}

TEST_CASE("disc pupil impulse follows the Airy profile") {
  const std::size_t n = 128;
  const double dx = 0.25, radius = 3.0;
  const Grid g({centered_axis(AxisKind::space, n, dx), centered_axis(AxisKind::space, n, dx)});
  const auto h = impulse_from_pupil(Pupil::circular(dual_of(g), radius));
  const std::size_t origin = (n / 2) * n + n / 2;
  const double peak = std::abs(h[origin]);
  CHECK(h[origin].real() == doctest::Approx(dx * dx * oracle::disc_impulse(0.0, radius)).epsilon(0.05));
  const double first_zero = 3.8317059702075125 / radius;
  double prev = peak * 2.0;
  for (std::size_t j = 0; static_cast<double>(j) * dx < first_zero; ++j) {
    const double r = static_cast<double>(j) * dx;
    const cplx v = h[origin + j];
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK(std::abs(v.real() - dx * dx * oracle::disc_impulse(r, radius)) < 0.05 * peak);
    CHECK(v.real() < prev);
    prev = v.real();
    // Rotational symmetry of the sampled pupil under x <-> y.
    CHECK(std::abs(h[origin + j * n] - v) < 1e-12);
  }
}

TEST_CASE("screen coordinate mapping") {
  const auto [kx, ky] = map_coordinates(1.0, 2.0, 0.5, 2.0);
  CHECK(kx == doctest::Approx(2.0 * oracle::pi));
  CHECK(ky == doctest::Approx(4.0 * oracle::pi));
  CHECK(map_coordinates(0.0, 0.0, 1.0, 1.0).first == 0.0);
  CHECK_THROWS_AS(map_coordinates(1.0, 1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(map_coordinates(1.0, 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("one lie split step equals a phase aperture plus Fresnel propagation") {
  oracle::Gen gen(83);
  for (int c = 0; c < 50; ++c) {
    const bool planar = c % 5 == 0;
    const Grid g = planar ? Grid({centered_axis(AxisKind::space, 16, gen.uniform(0.1, 1.0)),
                                  centered_axis(AxisKind::space, 8, gen.uniform(0.1, 1.0))})
                          : line(gen.index(8, 128) * 2, gen.uniform(0.05, 1.0));
    const auto psi = normalized(random_state(g, gen));
    const Potential v(g, gen.real_vector(g.size(), -10.0, 10.0));
    CHECK(qwp_sdt_equivalence(psi, v, gen.uniform(1e-3, 2.0), gen.uniform(0.3, 3.0)) < 1e-10);
  }
  // Independent route: phase screen then the direct k-space Fresnel sum.
  for (int c = 0; c < 5; ++c) {
    const Grid g = line(128, gen.uniform(0.05, 0.5));
    const auto psi = normalized(random_state(g, gen));
    const Potential v(g, gen.real_vector(128, -3.0, 3.0));
    const double tau = gen.uniform(0.01, 1.0);
    auto screened = psi;
    for (std::size_t j = 0; j < 128; ++j) screened[j] *= std::polar(1.0, -v.values()[j] * tau);
    PropagationOptions lie;
    lie.scheme = SplitScheme::lie;
    CHECK(oracle::max_abs_diff(oracle::direct_fresnel(screened, tau, 1.0), split_step(psi, v, tau, 1, lie).samples()) <
          1e-10);
  }
  const Grid g = line(64, 0.25);
  const auto psi = normalized(random_state(g, gen));
  CHECK(qwp_sdt_equivalence(psi, Potential::zero(g), 0.7) < 1e-12);
  CHECK(qwp_sdt_equivalence(psi, Potential(g, gen.real_vector(64, -1.0, 1.0)), 0.0) == 0.0);
  CHECK_THROWS_AS(qwp_sdt_equivalence(psi, Potential::zero(g), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(qwp_sdt_equivalence(psi, Potential::zero(line(64, 0.5)), 0.1), GridMismatch);
}
