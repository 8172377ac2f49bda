#pragma once

#include <cstddef>
#include <vector>

#include "wdst/grid.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

/// Real potential V(x) on a space-only grid, energy units with hbar = 1.
class Potential {
 public:
  /// Throws std::invalid_argument for non-space grids, size mismatch or non-finite values.
  Potential(Grid grid, std::vector<double> values);

  static Potential zero(const Grid& grid);
  /// m Omega^2 x^2 / 2 (first space axis; further axes add their own x^2 terms).
  static Potential harmonic(const Grid& grid, double mass, double omega);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

enum class SplitScheme { lie, strang };

/// Which sign the potential phase carries. `physical` applies exp(-i V tau), so that one
/// step approximates exp(-i H tau). `literal` applies exp(+i V tau) as printed in the
/// original time-slicing expression.
enum class PotentialSign { physical, literal };

struct PropagationOptions {
  double mass = 1.0;
  SplitScheme scheme = SplitScheme::strang;
  PotentialSign potential_sign = PotentialSign::physical;
};

/// Split-step propagation of a space-only state:
///   lie:    psi <- F^-1{ exp(-i k^2 tau / 2m) F{ exp(-i V tau) psi } }
///   strang: half potential step, kinetic step, half potential step.
/// Requires tau > 0 and steps >= 1.
WaveDistribution split_step(const WaveDistribution& psi, const Potential& v, double tau, std::size_t steps,
                            const PropagationOptions& opts = {});

/// Sampled kernel delta(t - tau) exp(i m x^2 / 2 tau) on an (x, t) grid: unit-modulus
/// chirp on the time bin nearest tau, zero elsewhere. Throws std::domain_error for
/// tau = 0 or a tau outside the time axis.
WaveDistribution impulse_response(double tau, double mass, const Grid& grid);

/// psi(x, t - tau) with periodic wrap, via F_t^-1{ exp(i omega tau) F_t{psi} }.
WaveDistribution time_shift(const WaveDistribution& psi_xt, double tau);

/// One slice over space and time together:
///   F^-1{ exp(-i k^2 tau / 2m + i omega tau) F{ exp(-i V tau) psi } }   (lie)
/// with the strang variant splitting the potential around the kernel. Without a time
/// axis this is a single split step.
WaveDistribution full_3p1_step(const WaveDistribution& psi_xt, const Potential& v, double tau,
                               const PropagationOptions& opts = {});

/// k^2 = sum of squared wavenumbers on each sample of a dual grid (time axes ignored).
std::vector<double> wavenumber_squared(const Grid& dual);

}  // namespace wdst
