#pragma once

#include <utility>
#include <vector>

#include "wdst/propagator.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

/// Complex transmittance on a space-only grid of rank 1 or 2. Passive: |t| <= 1 + 1e-12.
class Aperture {
 public:
  Aperture(Grid grid, std::vector<cplx> transmittance);

  static Aperture open(const Grid& grid);
  /// Fraction of each sample cell inside |x| <= width / 2 along the first axis (constant
  /// along a second axis). Edge cells are area-weighted, so the sampled width is exact.
  static Aperture slit(const Grid& grid, double width);
  /// exp(-i V tau): the transmittance of one potential slice.
  static Aperture phase(const Potential& v, double tau);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<cplx>& transmittance() const noexcept { return t_; }

 private:
  Grid grid_;
  std::vector<cplx> t_;
};

/// Complex multiplier over a wavenumber grid.
class Pupil {
 public:
  Pupil(Grid dual, std::vector<cplx> values);

  /// P = 1 where |k| <= radius.
  static Pupil circular(const Grid& dual, double radius);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<cplx>& values() const noexcept { return p_; }

 private:
  Grid grid_;
  std::vector<cplx> p_;
};

WaveDistribution apply_aperture(const WaveDistribution& g, const Aperture& a);

/// P = exp(-i |k|^2 delta / 2m).
Pupil fresnel_transfer(const Grid& dual, double delta, double mass);

/// inverse{ P forward{g} }
WaveDistribution propagate_wavefront(const WaveDistribution& g, const Pupil& p);

/// h with convolve(h, g) == propagate_wavefront(g, p): inverse{P} / sqrt(N). P = 1 gives a
/// unit sample at x = 0.
WaveDistribution impulse_from_pupil(const Pupil& p);

/// Screen coordinate to wavenumber, k = 2 pi x / (wavelength z).
std::pair<double, double> map_coordinates(double x, double y, double wavelength, double z);

/// Max-abs difference between one lie split step and aperture exp(-i V tau) followed by the
/// Fresnel pupil with delta = tau. tau = 0 is the identity on both routes and returns 0.
double qwp_sdt_equivalence(const WaveDistribution& psi, const Potential& v, double tau, double mass = 1.0);

}  // namespace wdst
