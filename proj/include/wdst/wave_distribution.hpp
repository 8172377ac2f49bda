#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wdst/grid.hpp"

namespace wdst {

using cplx = std::complex<double>;

/// Complex field sampled on a grid, row-major in the grid's axis order.
class WaveDistribution {
 public:
  WaveDistribution() = default;
  /// Zero-filled field.
  explicit WaveDistribution(Grid grid);
  /// Throws std::invalid_argument if the sample count differs from the grid size or
  /// any sample is not finite.
  WaveDistribution(Grid grid, std::vector<cplx> samples);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const cplx> samples() const noexcept { return samples_; }
  std::span<cplx> samples() noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

  cplx operator[](std::size_t i) const { return samples_[i]; }
  cplx& operator[](std::size_t i) { return samples_[i]; }

  /// Replaces the grid, keeping the samples (used by the transform engine).
  void relabel(Grid grid);

  /// Sum of |samples|^2.
  double norm_sq() const;

 private:
  Grid grid_;
  std::vector<cplx> samples_;
};

void require_same_grid(const WaveDistribution& a, const WaveDistribution& b);

}  // namespace wdst
