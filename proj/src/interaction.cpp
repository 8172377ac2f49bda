#include "wdst/interaction.hpp"

#include <cmath>
#include <stdexcept>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

namespace wdst {

namespace {

bool belongs(const Grid& grid, PhaseDomain domain) {
  return domain == PhaseDomain::spacetime ? grid.is_spacetime() : grid.is_dual();
}

bool is_temporal(AxisKind k) { return k == AxisKind::time || k == AxisKind::angular_frequency; }

}  // namespace

PhaseMap PhaseMap::linear(PhaseDomain domain, Linear form) {
  for (double c : form.spatial)
    if (!std::isfinite(c)) throw std::invalid_argument("phase map coefficients must be finite");
  if (!std::isfinite(form.temporal) || !std::isfinite(form.offset))
    throw std::invalid_argument("phase map coefficients must be finite");
  return PhaseMap(domain, std::move(form));
}

PhaseMap PhaseMap::sampled(PhaseDomain domain, Grid grid, std::vector<double> values) {
  if (values.size() != grid.size()) throw std::invalid_argument("sampled phase map size differs from its grid");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("sampled phase map values must be finite");
  if (!belongs(grid, domain)) throw GridMismatch("sampled phase map grid is not in the map's domain");
  return PhaseMap(domain, Sampled{std::move(grid), std::move(values)});
}

double PhaseMap::evaluate(std::span<const double> spatial, double temporal) const {
  const auto& lin = linear_form();
  double s = lin.offset + lin.temporal * temporal;
  for (std::size_t a = 0; a < lin.spatial.size() && a < spatial.size(); ++a) s += lin.spatial[a] * spatial[a];
  return s;
}

std::vector<double> PhaseMap::field(const Grid& grid) const {
  if (!belongs(grid, domain_)) throw GridMismatch("phase map evaluated on a grid outside its domain");
  if (const auto* smp = std::get_if<Sampled>(&form_)) {
    if (!(smp->grid == grid)) throw GridMismatch("sampled phase map grid differs");
    return smp->values;
  }
  const auto& lin = std::get<Linear>(form_);
  // Per-axis contribution, then summed per sample.
  std::vector<std::vector<double>> per_axis(grid.rank());
  std::size_t spatial_index = 0;
  for (std::size_t a = 0; a < grid.rank(); ++a) {
    const auto& ax = grid.axis(a);
    double coeff = 0.0;
    if (is_temporal(ax.kind)) {
      coeff = lin.temporal;
    } else {
      coeff = spatial_index < lin.spatial.size() ? lin.spatial[spatial_index] : 0.0;
      ++spatial_index;
    }
    per_axis[a].resize(ax.n);
    for (std::size_t j = 0; j < ax.n; ++j) per_axis[a][j] = coeff * ax.value(j);
  }
  std::vector<double> out(grid.size(), lin.offset);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t a = 0; a < grid.rank(); ++a) out[i] += per_axis[a][grid.coordinate_index(i, a)];
  return out;
}

PhaseMap linear_phase_map(PhaseDomain domain, const CoordinateInterval& coeffs) {
  if (domain == PhaseDomain::frequency) {
    const auto& st = coeffs.spacetime();
    return PhaseMap::linear(domain, {{st.x}, -st.t, 0.0});
  }
  const auto& mo = coeffs.momentum();
  return PhaseMap::linear(domain, {{mo.k}, -mo.omega, 0.0});
}

WaveDistribution interact(const WaveDistribution& psi, const PhaseMap& s_x, const PhaseMap& s_k) {
  if (!psi.grid().is_spacetime()) throw GridMismatch("interact needs a spacetime distribution");
  if (s_x.domain() != PhaseDomain::spacetime || s_k.domain() != PhaseDomain::frequency)
    throw GridMismatch("interact takes a spacetime map and a frequency map");
  const auto mask = AxesMask::all(psi.grid());
  WaveDistribution work = psi;
  kernels::apply_phase(work.samples(), s_x.field(work.grid()), 1.0);
  work = forward(work, mask);
  kernels::apply_phase(work.samples(), s_k.field(work.grid()), -1.0);
  return inverse(work, mask);
}

WaveDistribution detect(const WaveDistribution& psi, const CoordinateInterval& event) {
  return interact(psi, PhaseMap::zero(PhaseDomain::spacetime), linear_phase_map(PhaseDomain::frequency, event));
}

TrajectoryConstraint::TrajectoryConstraint(double k0, double omega0, double tolerance)
    : velocity_(0.0), tolerance_(tolerance) {
  if (k0 == 0.0) throw std::domain_error("trajectory_constraint: k0 = 0 leaves the velocity undefined");
  velocity_ = omega0 / k0;
}

bool TrajectoryConstraint::admissible(const CoordinateInterval& event) const {
  const auto& st = event.spacetime();
  if (st.t == 0.0) return std::abs(st.x) <= tolerance_;
  return std::abs(st.x / st.t - velocity_) <= tolerance_;
}

PhaseMap compose_path(std::span<const CoordinateInterval> segments) {
  if (segments.empty()) throw std::invalid_argument("compose_path needs at least one segment");
  double x = 0.0;
  double t = 0.0;
  for (const auto& seg : segments) {
    x += seg.spacetime().x;
    t += seg.spacetime().t;
  }
  return linear_phase_map(PhaseDomain::frequency, CoordinateInterval::event(x, t));
}

PhaseMap Pulse::phase_map(const CoordinateInterval& event) const {
  const auto& st = event.spacetime();
  return PhaseMap::linear(PhaseDomain::frequency,
                          {{st.x}, 0.0, momentum_sign * k_i * st.x - omega_i * st.t});
}

VariationResult variation_rank(std::span<const Pulse> pulses, const CoordinateInterval& event) {
  if (pulses.empty()) throw std::invalid_argument("variation_rank needs at least one pulse");
  const auto& st = event.spacetime();
  // Normal matrix of the rows (s_j x_i, -t_i).
  double a = 0.0, b = 0.0, c = 0.0;
  for (const auto& p : pulses) {
    if (p.momentum_sign != 1 && p.momentum_sign != -1) throw std::invalid_argument("pulse sign must be +1 or -1");
    const double r0 = p.momentum_sign * st.x;
    const double r1 = -st.t;
    a += r0 * r0;
    b += r0 * r1;
    c += r1 * r1;
  }
  const double mid = 0.5 * (a + c);
  const double rad = std::hypot(0.5 * (a - c), b);
  const double lo = mid - rad;
  const double hi = mid + rad;

  VariationResult out;
  if (hi == 0.0) {
    // Every row vanishes: any variation leaves the phases unchanged.
    out.common_null_direction = true;
    out.direction = {1.0, 0.0};
    return out;
  }
  out.common_null_direction = pulses.size() == 1 || lo <= 1e-12 * hi;
  if (!out.common_null_direction) return out;

  double v0 = 0.0, v1 = 0.0;
  if (std::abs(b) > 1e-300) {
    v0 = b;
    v1 = lo - a;
  } else if (a <= c) {
    v0 = 1.0;
  } else {
    v1 = 1.0;
  }
  const double len = std::hypot(v0, v1);
  out.direction = {v0 / len, v1 / len};
  return out;
}

}  // namespace wdst
