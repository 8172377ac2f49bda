#include "wdst/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

namespace wdst {

namespace {

bool space_only(const Grid& g) { return g.count(AxisKind::space) == g.rank() && g.rank() <= 2; }

bool wavenumber_only(const Grid& g) { return g.count(AxisKind::wavenumber) == g.rank(); }

void check_finite(const std::vector<cplx>& v, const char* what) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

Aperture::Aperture(Grid grid, std::vector<cplx> transmittance) : grid_(std::move(grid)), t_(std::move(transmittance)) {
  if (!space_only(grid_)) throw std::invalid_argument("aperture lives on a 1D or 2D space grid");
  if (t_.size() != grid_.size()) throw std::invalid_argument("aperture size differs from its grid");
  check_finite(t_, "aperture transmittance");
  for (const auto& z : t_)
    if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("aperture transmittance exceeds unit modulus");
}

Aperture Aperture::open(const Grid& grid) { return Aperture(grid, std::vector<cplx>(grid.size(), 1.0)); }

Aperture Aperture::slit(const Grid& grid, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("slit width must be positive");
  const auto& ax = grid.axis(0);
  const double h = 0.5 * ax.step;
  std::vector<cplx> t(grid.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double x = ax.value(grid.coordinate_index(i, 0));
    const double covered = std::min(x + h, 0.5 * width) - std::max(x - h, -0.5 * width);
    t[i] = std::clamp(covered / ax.step, 0.0, 1.0);
  }
  return Aperture(grid, std::move(t));
}

Aperture Aperture::phase(const Potential& v, double tau) {
  std::vector<cplx> t(v.values().size(), 1.0);
  kernels::apply_phase(t, v.values(), -tau);
  return Aperture(v.grid(), std::move(t));
}

Pupil::Pupil(Grid dual, std::vector<cplx> values) : grid_(std::move(dual)), p_(std::move(values)) {
  if (!wavenumber_only(grid_)) throw std::invalid_argument("pupil lives on a wavenumber grid");
  if (p_.size() != grid_.size()) throw std::invalid_argument("pupil size differs from its grid");
  check_finite(p_, "pupil");
}

Pupil Pupil::circular(const Grid& dual, double radius) {
  const auto k2 = wavenumber_squared(dual);
  std::vector<cplx> p(dual.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (k2[i] <= radius * radius) p[i] = 1.0;
  return Pupil(dual, std::move(p));
}

WaveDistribution apply_aperture(const WaveDistribution& g, const Aperture& a) {
  if (!(g.grid() == a.grid())) throw GridMismatch("apply_aperture: aperture grid differs");
  WaveDistribution out = g;
  kernels::multiply(out.samples(), a.transmittance());
  return out;
}

Pupil fresnel_transfer(const Grid& dual, double delta, double mass) {
  if (!std::isfinite(delta)) throw std::invalid_argument("fresnel_transfer: delta must be finite");
  if (!(mass > 0.0)) throw std::invalid_argument("fresnel_transfer: mass must be positive");
  std::vector<cplx> p(dual.size(), 1.0);
  kernels::apply_phase(p, wavenumber_squared(dual), -delta / (2.0 * mass));
  return Pupil(dual, std::move(p));
}

WaveDistribution propagate_wavefront(const WaveDistribution& g, const Pupil& p) {
  if (!space_only(g.grid())) throw GridMismatch("propagate_wavefront needs a space-only wavefront");
  const auto mask = AxesMask::all(g.grid());
  auto work = forward(g, mask);
  if (!(work.grid() == p.grid())) throw GridMismatch("propagate_wavefront: pupil grid is not the wavefront's dual");
  kernels::multiply(work.samples(), p.values());
  return inverse(work, mask);
}

WaveDistribution impulse_from_pupil(const Pupil& p) {
  const auto mask = AxesMask::all(p.grid());
  auto h = inverse(WaveDistribution(p.grid(), p.values()), mask);
  kernels::scale(h.samples(), 1.0 / std::sqrt(static_cast<double>(h.size())));
  return h;
}

std::pair<double, double> map_coordinates(double x, double y, double wavelength, double z) {
  if (z == 0.0 || !std::isfinite(z)) throw std::invalid_argument("map_coordinates: z must be finite and nonzero");
  if (!(wavelength > 0.0)) throw std::invalid_argument("map_coordinates: wavelength must be positive");
  const double scale = 2.0 * std::numbers::pi / (wavelength * z);
  return {scale * x, scale * y};
}

double qwp_sdt_equivalence(const WaveDistribution& psi, const Potential& v, double tau, double mass) {
  if (!space_only(psi.grid())) throw GridMismatch("qwp_sdt_equivalence needs a 1D or 2D spatial state");
  if (!(psi.grid() == v.grid())) throw GridMismatch("qwp_sdt_equivalence: potential grid differs");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("qwp_sdt_equivalence: tau must be >= 0");
  if (tau == 0.0) return 0.0;

  PropagationOptions opts;
  opts.mass = mass;
  opts.scheme = SplitScheme::lie;
  const auto slice = split_step(psi, v, tau, 1, opts);

  const auto transmitted = apply_aperture(psi, Aperture::phase(v, tau));
  const auto screen = propagate_wavefront(transmitted, fresnel_transfer(dual_of(psi.grid()), tau, mass));
  return kernels::max_abs_diff(slice.samples(), screen.samples());
}

}  // namespace wdst
