#pragma once

#include <array>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "wdst/distribution.hpp"
#include "wdst/grid.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

enum class PhaseDomain { spacetime, frequency };

/// Real phase field S over one domain, either linear in the grid parameters or sampled.
///
/// A linear map is S = sum_a coeff_a * p_a + offset, where p_a runs over the spatial
/// parameters (x or k, in axis order) followed by the temporal one (t or omega).
class PhaseMap {
 public:
  struct Linear {
    std::vector<double> spatial;  ///< one coefficient per space/wavenumber axis
    double temporal = 0.0;        ///< coefficient of t or omega
    double offset = 0.0;
  };
  struct Sampled {
    Grid grid;
    std::vector<double> values;
  };

  static PhaseMap zero(PhaseDomain domain) { return PhaseMap(domain, Linear{}); }
  static PhaseMap linear(PhaseDomain domain, Linear form);
  /// Throws std::invalid_argument on a size mismatch or non-finite value, and
  /// GridMismatch if the grid's axes do not belong to `domain`.
  static PhaseMap sampled(PhaseDomain domain, Grid grid, std::vector<double> values);

  PhaseDomain domain() const noexcept { return domain_; }
  bool is_linear() const noexcept { return std::holds_alternative<Linear>(form_); }
  const Linear& linear_form() const { return std::get<Linear>(form_); }
  const Sampled& sampled_form() const { return std::get<Sampled>(form_); }

  /// S at one point. Missing spatial coefficients count as zero.
  double evaluate(std::span<const double> spatial, double temporal = 0.0) const;

  /// S on every sample of `grid`, whose axes must belong to this map's domain.
  std::vector<double> field(const Grid& grid) const;

 private:
  PhaseMap(PhaseDomain domain, std::variant<Linear, Sampled> form) : domain_(domain), form_(std::move(form)) {}

  PhaseDomain domain_;
  std::variant<Linear, Sampled> form_;
};

/// For PhaseDomain::frequency: S_k = k x_i - omega t_i from the interval's spacetime pair.
/// For PhaseDomain::spacetime: S_x = k_i x - omega_i t from its momentum pair.
PhaseMap linear_phase_map(PhaseDomain domain, const CoordinateInterval& coeffs);

/// psi' = F^-1{ exp(-i S_k) F{ exp(i S_x) psi } } over every axis of psi.
WaveDistribution interact(const WaveDistribution& psi, const PhaseMap& s_x, const PhaseMap& s_k);

/// Ideal localizing detector: psi translated by the event's (x_i, t_i). Realised by the
/// linear frequency-domain map, so off-grid intervals are exact. Grids without a time
/// axis ignore t_i.
WaveDistribution detect(const WaveDistribution& psi, const CoordinateInterval& event);

/// Events consistent with rectilinear motion at v = omega0 / k0.
class TrajectoryConstraint {
 public:
  /// Throws std::domain_error for k0 = 0 (velocity undefined).
  TrajectoryConstraint(double k0, double omega0, double tolerance = 1e-9);

  double velocity() const noexcept { return velocity_; }
  /// |x_i / t_i - v| <= tol; for t_i = 0 only |x_i| <= tol qualifies.
  bool admissible(const CoordinateInterval& event) const;

 private:
  double velocity_;
  double tolerance_;
};

inline TrajectoryConstraint trajectory_constraint(double k0, double omega0, double tolerance = 1e-9) {
  return TrajectoryConstraint(k0, omega0, tolerance);
}

/// Frequency-domain map of a whole path: the segment intervals summed.
/// Throws std::invalid_argument for an empty list.
PhaseMap compose_path(std::span<const CoordinateInterval> segments);

/// One term of a split wavepacket whose phase depends on the measured 4-momentum as
/// S = (k + s k_i) x_i - omega_i t_i. The reflected term of a beam splitter has s = -1.
struct Pulse {
  int momentum_sign = +1;
  double k_i = 0.0;
  double omega_i = 0.0;

  /// The pulse's frequency-domain phase map for the given event.
  PhaseMap phase_map(const CoordinateInterval& event) const;
};

struct VariationResult {
  bool common_null_direction = false;
  /// Unit (dk_i, domega_i) with dS_j = 0 for every pulse; zero when none exists.
  std::array<double, 2> direction{0.0, 0.0};
};

/// Solves dS_j = s_j x_i dk_i - t_i domega_i = 0 for all pulses and reports whether a
/// nontrivial common variation exists (the system is rank-deficient).
VariationResult variation_rank(std::span<const Pulse> pulses, const CoordinateInterval& event);

}  // namespace wdst
