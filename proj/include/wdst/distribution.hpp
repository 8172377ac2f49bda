#pragma once

#include <cstddef>
#include <optional>

#include "wdst/grid.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

struct SpacetimeOffset {
  double x = 0.0;
  double t = 0.0;
};

struct MomentumOffset {
  double k = 0.0;
  double omega = 0.0;
};

/// A measured interval between interaction events: a spacetime offset, a 4-momentum
/// value, or both. Unlike grid parameters, these are always finite numbers.
class CoordinateInterval {
 public:
  /// Throws std::invalid_argument if both pairs are absent or any value is not finite.
  CoordinateInterval(std::size_t index, std::optional<SpacetimeOffset> spacetime,
                     std::optional<MomentumOffset> momentum = std::nullopt);

  static CoordinateInterval event(double x, double t, std::size_t index = 0) {
    return CoordinateInterval(index, SpacetimeOffset{x, t});
  }
  static CoordinateInterval momentum(double k, double omega, std::size_t index = 0) {
    return CoordinateInterval(index, std::nullopt, MomentumOffset{k, omega});
  }

  std::size_t index() const noexcept { return index_; }
  bool has_spacetime() const noexcept { return spacetime_.has_value(); }
  bool has_momentum() const noexcept { return momentum_.has_value(); }
  /// Throws std::logic_error when the pair is absent.
  const SpacetimeOffset& spacetime() const;
  const MomentumOffset& momentum() const;

 private:
  std::size_t index_;
  std::optional<SpacetimeOffset> spacetime_;
  std::optional<MomentumOffset> momentum_;
};

/// exp(-(x-x0)^2 / 2 sigma^2) exp(i k0 x - i omega0 (t - t0)), unit norm.
///
/// `center` supplies (x0, t0). The grid needs one space axis and at most one time axis;
/// x - x0 is wrapped into the periodic box, so an out-of-span x0 wraps around.
WaveDistribution gaussian_packet(const Grid& grid, const CoordinateInterval& center, double k0, double omega0,
                                 double sigma);

/// A(x,t) exp(i k0 x - i omega0 t), unit norm, A = 1 without an envelope. The grid needs
/// a space axis and a time axis; the envelope must share the grid.
WaveDistribution plane_wave(const Grid& grid, double k0, double omega0,
                            const WaveDistribution* envelope = nullptr);

/// n = 1 box eigenstate in momentum space, taken literally:
///   1/(1 + kL) * sinc((pi - kL)/2) * exp(i k x_c) * exp(-i omega1 tau), unit norm.
/// `dual` must carry a single wavenumber axis. Throws std::domain_error if a bin sits on
/// the singular point kL = -1.
WaveDistribution box_momentum_state(double width, double center, double omega1, double tau, const Grid& dual);

/// Unit impulse (value 1) at the sample nearest the given coordinates, one per axis.
WaveDistribution unit_impulse(const Grid& grid, const std::vector<double>& at);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance along one axis of |psi|^2 / sum |psi|^2, other axes marginalised.
/// Space/time axes use the sample coordinates; frequency axes use the signed bins.
/// Throws std::domain_error for a zero-norm distribution.
Moments moments(const WaveDistribution& dist, std::size_t axis);

/// Var_x * Var_k for a space axis, with Var_k taken from the transform along that axis.
/// Bounded below by 1/4 in the angular-wavenumber convention.
double uncertainty_product(const WaveDistribution& dist, std::size_t axis);

/// Returns dist scaled to unit sum |psi|^2.
WaveDistribution normalized(WaveDistribution dist);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phi) noexcept;

struct GlobalPhaseFit {
  double phase = 0.0;     ///< phi with b ~ exp(i phi) a, estimated from <a|b>
  double mismatch = 0.0;  ///< max |b - exp(i phi) a|
};

/// Compares two distributions up to a global phase.
GlobalPhaseFit fit_global_phase(const WaveDistribution& a, const WaveDistribution& b);

}  // namespace wdst
