#include "wdst/twostate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"

namespace wdst {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

void check_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive and finite");
}

using State = std::array<cplx, 2>;

// -i M(t) c
State rhs(const TwoLevelSystem& sys, double t, const State& c) {
  const double d = sys.detuning();
  const cplx m12 = sys.v0 * std::polar(1.0, d * t);
  const cplx m21 = sys.v0 * std::polar(1.0, -d * t);
  return {-I * m12 * c[1], -I * m21 * c[0]};
}

State axpy(const State& c, double h, const State& k) { return {c[0] + h * k[0], c[1] + h * k[1]}; }

double power_at(const TwoLevelSystem& sys, double tau, const ScanOptions& opts) {
  const auto amp = opts.method == ScanMethod::closed_form ? first_order_amplitude(sys, tau)
                                                          : tdse_oracle(sys, tau, opts.oracle_dt);
  return std::norm(amp.c2);
}

}  // namespace

void TwoLevelSystem::validate() const {
  if (!std::isfinite(e1) || !std::isfinite(e2) || !std::isfinite(v0) || !std::isfinite(omega_d))
    throw std::invalid_argument("two-level system parameters must be finite");
}

std::vector<cplx> windowed_potential(const TwoLevelSystem& sys, double tau, const AxisSpec& time) {
  sys.validate();
  check_tau(tau);
  if (time.kind != AxisKind::time) throw GridMismatch("windowed_potential samples a time axis");
  std::vector<cplx> v(time.n);
  for (std::size_t j = 0; j < time.n; ++j) {
    const double t = time.value(j);
    if (t >= 0.0 && t <= tau) v[j] = sys.v0 * std::polar(1.0, -sys.omega_d * t);
  }
  return v;
}

AmplitudePair first_order_amplitude(const TwoLevelSystem& sys, double tau) {
  sys.validate();
  check_tau(tau);
  const double d = sys.detuning();
  const double half = 0.5 * d * tau;
  // sin(h)/h continued through h = 0; the series keeps full precision near the limit.
  const double sinc = std::abs(half) < 1e-4 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
  AmplitudePair out;
  out.c2 = -I * sys.v0 * tau * sinc * std::polar(1.0, -half);
  return out;
}

AmplitudePair tdse_oracle(const TwoLevelSystem& sys, double tau, double dt) {
  sys.validate();
  check_tau(tau);
  if (!(dt > 0.0)) throw std::invalid_argument("tdse_oracle: dt must be positive");
  const double fastest = std::max({std::abs(sys.omega_mn()), std::abs(sys.omega_d), std::abs(sys.v0),
                                   std::abs(sys.detuning())});
  if (fastest > 0.0 && dt > 0.05 * 2.0 * pi / fastest) {
    std::ostringstream msg;
    msg << "dt = " << dt << " exceeds 0.05 of the fastest period " << 2.0 * pi / fastest;
    throw GuardViolation("step_size", msg.str());
  }

  State c{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  const auto steps = static_cast<std::size_t>(std::ceil(tau / dt - 1e-9));
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * dt;
    const double h = std::min(dt, tau - t);
    const State k1 = rhs(sys, t, c);
    const State k2 = rhs(sys, t + 0.5 * h, axpy(c, 0.5 * h, k1));
    const State k3 = rhs(sys, t + 0.5 * h, axpy(c, 0.5 * h, k2));
    const State k4 = rhs(sys, t + h, axpy(c, h, k3));
    for (int i = 0; i < 2; ++i) c[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return {c[0], c[1]};
}

ResonanceProfile resonance_scan(const TwoLevelSystem& sys, const ScanRange& range, double tau,
                                const ScanOptions& opts) {
  sys.validate();
  check_tau(tau);
  if (!(range.step > 0.0) || !std::isfinite(range.start) || !std::isfinite(range.stop) || range.stop < range.start)
    throw std::invalid_argument("resonance_scan: empty scan range");
  const auto count = static_cast<std::size_t>(std::floor((range.stop - range.start) / range.step + 1e-9)) + 1;

  ResonanceProfile prof;
  prof.omega_d.resize(count);
  prof.power.resize(count);
  for (std::size_t i = 0; i < count; ++i) prof.omega_d[i] = range.start + static_cast<double>(i) * range.step;

  const auto n = static_cast<std::ptrdiff_t>(count);
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      TwoLevelSystem s = sys;
      s.omega_d = prof.omega_d[static_cast<std::size_t>(i)];
      prof.power[static_cast<std::size_t>(i)] = power_at(s, tau, opts);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      TwoLevelSystem s = sys;
      s.omega_d = prof.omega_d[static_cast<std::size_t>(i)];
      prof.power[static_cast<std::size_t>(i)] = power_at(s, tau, opts);
    }
  }

  const auto peak = static_cast<std::size_t>(std::max_element(prof.power.begin(), prof.power.end()) - prof.power.begin());
  prof.peak_omega = prof.omega_d[peak];
  prof.null_below = prof.null_above = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = peak; i-- > 1;)
    if (prof.power[i] <= prof.power[i - 1] && prof.power[i] <= prof.power[i + 1]) {
      prof.null_below = prof.omega_d[i];
      break;
    }
  for (std::size_t i = peak + 1; i + 1 < count; ++i)
    if (prof.power[i] <= prof.power[i - 1] && prof.power[i] <= prof.power[i + 1]) {
      prof.null_above = prof.omega_d[i];
      break;
    }
  return prof;
}

cplx second_order_coefficient(const TwoLevelSystem& sys, double tau, std::size_t intervals) {
  sys.validate();
  check_tau(tau);
  if (intervals < 1) throw std::invalid_argument("second_order_coefficient needs at least one interval");
  const double dp = sys.omega_mn() - sys.omega_d;
  const double h = tau / static_cast<double>(intervals);
  cplx inner{};  // int_0^t1 exp(i D' t2) dt2
  cplx outer{};
  cplx prev_inner_f = 1.0;
  cplx prev_outer_f = 0.0;  // integrand at t1 = 0 (inner = 0)
  for (std::size_t j = 1; j <= intervals; ++j) {
    const double t = static_cast<double>(j) * h;
    const cplx f = std::polar(1.0, dp * t);
    inner += 0.5 * h * (prev_inner_f + f);
    prev_inner_f = f;
    const cplx g = std::conj(f) * inner;
    outer += 0.5 * h * (prev_outer_f + g);
    prev_outer_f = g;
  }
  return -sys.v0 * sys.v0 * outer;
}

}  // namespace wdst
