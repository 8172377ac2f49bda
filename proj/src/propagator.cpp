#include "wdst/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

namespace wdst {

Potential::Potential(Grid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.count(AxisKind::space) != grid_.rank()) throw std::invalid_argument("potential lives on a space-only grid");
  if (values_.size() != grid_.size()) throw std::invalid_argument("potential size differs from its grid");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("potential must be finite everywhere");
}

Potential Potential::zero(const Grid& grid) { return Potential(grid, std::vector<double>(grid.size(), 0.0)); }

Potential Potential::harmonic(const Grid& grid, double mass, double omega) {
  std::vector<double> v(grid.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t a = 0; a < grid.rank(); ++a) {
      const double x = grid.axis(a).value(grid.coordinate_index(i, a));
      v[i] += 0.5 * mass * omega * omega * x * x;
    }
  return Potential(grid, std::move(v));
}

std::vector<double> wavenumber_squared(const Grid& dual) {
  std::vector<double> k2(dual.size(), 0.0);
  for (std::size_t a = 0; a < dual.rank(); ++a) {
    if (dual.axis(a).kind != AxisKind::wavenumber) continue;
    for (std::size_t i = 0; i < k2.size(); ++i) {
      const double k = dual.axis(a).value(dual.coordinate_index(i, a));
      k2[i] += k * k;
    }
  }
  return k2;
}

namespace {

double potential_sign(const PropagationOptions& opts) {
  return opts.potential_sign == PotentialSign::physical ? -1.0 : 1.0;
}

void check_options(const PropagationOptions& opts) {
  if (!(opts.mass > 0.0) || !std::isfinite(opts.mass)) throw std::invalid_argument("mass must be positive");
}

// V(x) broadcast over any non-space axes of `grid` (the time axis of (x, t) states).
std::vector<double> broadcast_potential(const Potential& v, const Grid& grid) {
  std::vector<AxisSpec> space;
  std::vector<std::size_t> space_axes;
  for (std::size_t a = 0; a < grid.rank(); ++a)
    if (grid.axis(a).kind == AxisKind::space) {
      space.push_back(grid.axis(a));
      space_axes.push_back(a);
    }
  if (space.empty() || !(Grid(space) == v.grid())) throw GridMismatch("potential grid differs from the state's space axes");
  if (space_axes.size() == grid.rank()) return v.values();
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t flat = 0;
    for (std::size_t s = 0; s < space_axes.size(); ++s)
      flat += grid.coordinate_index(i, space_axes[s]) * v.grid().stride(s);
    out[i] = v.values()[flat];
  }
  return out;
}

}  // namespace

WaveDistribution split_step(const WaveDistribution& psi, const Potential& v, double tau, std::size_t steps,
                            const PropagationOptions& opts) {
  check_options(opts);
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("split_step: tau must be positive");
  if (steps < 1) throw std::invalid_argument("split_step: steps must be at least 1");
  if (!(psi.grid() == v.grid())) throw GridMismatch("split_step: potential grid differs from the state grid");

  const auto mask = AxesMask::all(psi.grid());
  const Grid dual = dual_of(psi.grid());
  const double sign = potential_sign(opts);
  const double v_scale = sign * tau * (opts.scheme == SplitScheme::strang ? 0.5 : 1.0);
  const auto k2 = wavenumber_squared(dual);
  const double kin_scale = -tau / (2.0 * opts.mass);

  WaveDistribution work = psi;
  for (std::size_t s = 0; s < steps; ++s) {
    kernels::apply_phase(work.samples(), v.values(), v_scale);
    work = forward(work, mask);
    kernels::apply_phase(work.samples(), k2, kin_scale);
    work = inverse(work, mask);
    if (opts.scheme == SplitScheme::strang) kernels::apply_phase(work.samples(), v.values(), v_scale);
  }
  return work;
}

WaveDistribution impulse_response(double tau, double mass, const Grid& grid) {
  if (!grid.is_spacetime() || grid.rank() != 2 || !grid.has(AxisKind::space) || !grid.has(AxisKind::time))
    throw GridMismatch("impulse_response needs an (x, t) grid");
  if (tau == 0.0 || !std::isfinite(tau)) throw std::domain_error("impulse_response: tau = 0 is singular");
  const std::size_t xa = grid.find(AxisKind::space);
  const std::size_t ta = grid.find(AxisKind::time);
  const auto& tax = grid.axis(ta);
  const double pos = (tau - tax.origin) / tax.step;
  const auto bin = std::llround(pos);
  if (bin < 0 || bin >= static_cast<long long>(tax.n))
    throw std::domain_error("impulse_response: tau lies outside the time axis");
  if (tax.value(static_cast<std::size_t>(bin)) == 0.0) throw std::domain_error("impulse_response: tau falls on t = 0");

  WaveDistribution h(grid);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (grid.coordinate_index(i, ta) != static_cast<std::size_t>(bin)) continue;
    const double x = grid.axis(xa).value(grid.coordinate_index(i, xa));
    h[i] = std::polar(1.0, mass * x * x / (2.0 * tau));
  }
  return h;
}

WaveDistribution time_shift(const WaveDistribution& psi_xt, double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("time_shift: tau must be finite");
  const Grid& g = psi_xt.grid();
  const std::size_t ta = g.find(AxisKind::time);
  if (ta == g.rank()) throw GridMismatch("time_shift needs a time axis");
  const auto mask = AxesMask::only(g, ta);
  auto work = forward(psi_xt, mask);
  const auto& wax = work.grid().axis(ta);
  std::vector<cplx> shift(wax.n);
  for (std::size_t m = 0; m < wax.n; ++m) shift[m] = std::polar(1.0, wax.value(m) * tau);
  kernels::multiply_along_axis(work.samples(), work.grid(), ta, shift);
  return inverse(work, mask);
}

WaveDistribution full_3p1_step(const WaveDistribution& psi_xt, const Potential& v, double tau,
                               const PropagationOptions& opts) {
  check_options(opts);
  if (!std::isfinite(tau)) throw std::invalid_argument("full_3p1_step: tau must be finite");
  const Grid& g = psi_xt.grid();
  if (!g.is_spacetime()) throw GridMismatch("full_3p1_step needs a spacetime distribution");
  const auto vfield = broadcast_potential(v, g);
  const auto mask = AxesMask::all(g);
  const double sign = potential_sign(opts);
  const double v_scale = sign * tau * (opts.scheme == SplitScheme::strang ? 0.5 : 1.0);

  WaveDistribution work = psi_xt;
  kernels::apply_phase(work.samples(), vfield, v_scale);
  work = forward(work, mask);
  const Grid& dual = work.grid();
  auto kernel_phase = wavenumber_squared(dual);
  const double kin_scale = -tau / (2.0 * opts.mass);
  for (auto& p : kernel_phase) p *= kin_scale;
  if (const std::size_t wa = dual.find(AxisKind::angular_frequency); wa != dual.rank())
    for (std::size_t i = 0; i < kernel_phase.size(); ++i)
      kernel_phase[i] += dual.axis(wa).value(dual.coordinate_index(i, wa)) * tau;
  kernels::apply_phase(work.samples(), kernel_phase, 1.0);
  work = inverse(work, mask);
  if (opts.scheme == SplitScheme::strang) kernels::apply_phase(work.samples(), vfield, v_scale);
  return work;
}

}  // namespace wdst
