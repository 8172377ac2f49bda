#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wdst/grid.hpp"

namespace wdst {

using cplx = std::complex<double>;

/// Two levels E1 < or > E2 coupled by the rotating drive V21(t) = V0 exp(-i omega_d t),
/// V12 = conj(V21), zero diagonal. hbar = 1.
struct TwoLevelSystem {
  double e1 = 0.0;
  double e2 = 1.0;
  double v0 = 0.0;
  double omega_d = 1.0;

  double omega_mn() const noexcept { return e2 - e1; }
  /// omega_d - omega_mn
  double detuning() const noexcept { return omega_d - omega_mn(); }
  /// Throws std::invalid_argument for non-finite fields.
  void validate() const;
};

/// Interaction-picture amplitudes of |+> (E1) and |-> (E2).
struct AmplitudePair {
  cplx c1{1.0, 0.0};
  cplx c2{0.0, 0.0};

  double norm_sq() const noexcept { return std::norm(c1) + std::norm(c2); }
  /// First-order results may exceed unit norm at strong drive.
  bool exceeds_unit_norm() const noexcept { return norm_sq() > 1.0 + 1e-9; }
};

/// V0 exp(-i omega_d t) on [0, tau] (both ends included), zero elsewhere, sampled on `time`.
std::vector<cplx> windowed_potential(const TwoLevelSystem& sys, double tau, const AxisSpec& time);

/// c2 = -i V0 exp(-i D tau / 2) sin(D tau / 2) / (D / 2), D = omega_d - omega_mn; the limit
/// -i V0 tau at D = 0. c1 = 1. This is the drive integral -i int_0^tau V0 exp(-i D t) dt.
AmplitudePair first_order_amplitude(const TwoLevelSystem& sys, double tau);

/// Classical RK4 integration of i dc/dt = M(t) c from c = (1, 0) over [0, tau], with
/// M12 = V0 exp(i D t), M21 = V0 exp(-i D t). The last step is shortened to land on tau.
/// Throws GuardViolation("step_size") when dt exceeds 0.05 of the fastest period.
AmplitudePair tdse_oracle(const TwoLevelSystem& sys, double tau, double dt);

struct ScanRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

enum class ScanMethod { closed_form, oracle };

struct ResonanceProfile {
  std::vector<double> omega_d;
  std::vector<double> power;  ///< |c2|^2
  double peak_omega = 0.0;
  /// Nearest local minima below and above the peak; NaN if the scan ends first.
  double null_below = 0.0;
  double null_above = 0.0;
};

struct ScanOptions {
  ScanMethod method = ScanMethod::closed_form;
  double oracle_dt = 1e-3;
  bool parallel = true;
};

/// |c2|^2 over omega_d = start, start + step, ... <= stop. Throws std::invalid_argument for
/// an empty range or a non-positive step.
ResonanceProfile resonance_scan(const TwoLevelSystem& sys, const ScanRange& range, double tau,
                                const ScanOptions& opts = {});

/// Second-order amplitude of the initial level,
///   c1^(2) = -V0^2 int_0^tau dt1 exp(-i D' t1) int_0^t1 dt2 exp(i D' t2),  D' = omega_mn - omega_d,
/// by nested cumulative trapezoid quadrature over `intervals` panels. The second-order
/// correction to c2 vanishes identically for a zero-diagonal drive.
cplx second_order_coefficient(const TwoLevelSystem& sys, double tau, std::size_t intervals = 20000);

}  // namespace wdst
