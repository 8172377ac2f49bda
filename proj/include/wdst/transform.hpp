#pragma once

#include <vector>

#include "wdst/grid.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

/// Per-axis selection of the axes a transform acts on.
class AxesMask {
 public:
  explicit AxesMask(std::vector<bool> selected);

  static AxesMask all(const Grid& grid);
  static AxesMask only(const Grid& grid, std::size_t axis);
  /// Every axis of the given kind.
  static AxesMask of_kind(const Grid& grid, AxisKind kind);
  /// Space/wavenumber axes only.
  static AxesMask spatial(const Grid& grid);

  bool operator[](std::size_t a) const { return selected_.at(a); }
  std::size_t size() const noexcept { return selected_.size(); }
  const std::vector<bool>& bits() const noexcept { return selected_; }

 private:
  std::vector<bool> selected_;
};

/// Unitary discrete Fourier transform of the masked axes.
///
///   space axes:  F(k) = n^-1/2 sum_x f(x) exp(-i k x)
///   time axes:   F(w) = n^-1/2 sum_t f(t) exp(+i w t)
///
/// x and t are the absolute sample coordinates (origin included), so a unit impulse at
/// x = a maps to exp(-i k a) / sqrt(n) and a plane wave exp(i k0 x - i w0 t) peaks at
/// the bin (k0, w0). Masked axes must be space/time axes; they become dual axes.
/// Throws GridMismatch otherwise.
WaveDistribution forward(const WaveDistribution& dist, const AxesMask& mask);

/// Exact inverse of forward on the same mask. Masked axes must be dual axes.
WaveDistribution inverse(const WaveDistribution& dist, const AxesMask& mask);

/// Circular convolution along the masked axes, referenced to the coordinate origin:
/// (a * b)(x) = sum_y a(y) b(x - y). A unit impulse at x = 0 is the identity; the
/// sifting is exact when the axis origin is a whole number of steps.
WaveDistribution convolve(const WaveDistribution& a, const WaveDistribution& b, const AxesMask& mask);

/// Number of FFTW plans currently cached (diagnostics and tests).
std::size_t cached_plan_count();

}  // namespace wdst
