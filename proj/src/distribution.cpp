#include "wdst/distribution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

namespace wdst {

WaveDistribution::WaveDistribution(Grid grid) : grid_(std::move(grid)), samples_(grid_.size()) {}

WaveDistribution::WaveDistribution(Grid grid, std::vector<cplx> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw std::invalid_argument("sample count " + std::to_string(samples_.size()) + " differs from grid size " +
                                std::to_string(grid_.size()));
  for (const auto& z : samples_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("wave distribution samples must be finite");
}

void WaveDistribution::relabel(Grid grid) {
  if (grid.size() != samples_.size()) throw GridMismatch("relabel changes the sample count");
  grid_ = std::move(grid);
}

double WaveDistribution::norm_sq() const { return kernels::norm_sq(samples_); }

void require_same_grid(const WaveDistribution& a, const WaveDistribution& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("distributions live on different grids");
}

CoordinateInterval::CoordinateInterval(std::size_t index, std::optional<SpacetimeOffset> spacetime,
                                       std::optional<MomentumOffset> momentum)
    : index_(index), spacetime_(spacetime), momentum_(momentum) {
  if (!spacetime_ && !momentum_) throw std::invalid_argument("coordinate interval needs a spacetime or momentum pair");
  if (spacetime_ && !(std::isfinite(spacetime_->x) && std::isfinite(spacetime_->t)))
    throw std::invalid_argument("coordinate intervals are finite");
  if (momentum_ && !(std::isfinite(momentum_->k) && std::isfinite(momentum_->omega)))
    throw std::invalid_argument("coordinate intervals are finite");
}

const SpacetimeOffset& CoordinateInterval::spacetime() const {
  if (!spacetime_) throw std::logic_error("interval has no spacetime offset");
  return *spacetime_;
}

const MomentumOffset& CoordinateInterval::momentum() const {
  if (!momentum_) throw std::logic_error("interval has no momentum value");
  return *momentum_;
}

WaveDistribution normalized(WaveDistribution dist) {
  const double n2 = dist.norm_sq();
  if (!(n2 > 0.0)) throw std::domain_error("cannot normalise a zero-norm distribution");
  kernels::scale(dist.samples(), 1.0 / std::sqrt(n2));
  return dist;
}

double wrap_phase(double phi) noexcept {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(phi, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

namespace {

double wrap_offset(double dx, double period) { return dx - period * std::round(dx / period); }

}  // namespace

WaveDistribution gaussian_packet(const Grid& grid, const CoordinateInterval& center, double k0, double omega0,
                                 double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_packet: sigma must be positive");
  if (!grid.is_spacetime() || grid.count(AxisKind::space) != 1 || grid.count(AxisKind::time) > 1)
    throw GridMismatch("gaussian_packet needs one space axis and at most one time axis");
  const auto& c = center.spacetime();
  const std::size_t xa = grid.find(AxisKind::space);
  const std::size_t ta = grid.find(AxisKind::time);
  const auto& xax = grid.axis(xa);

  std::vector<cplx> s(grid.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = xax.value(grid.coordinate_index(i, xa));
    const double dx = wrap_offset(x - c.x, xax.span());
    double phase = k0 * x;
    if (ta != grid.rank()) phase -= omega0 * (grid.axis(ta).value(grid.coordinate_index(i, ta)) - c.t);
    s[i] = std::polar(std::exp(-dx * dx / (2.0 * sigma * sigma)), phase);
  }
  return normalized(WaveDistribution(grid, std::move(s)));
}

WaveDistribution plane_wave(const Grid& grid, double k0, double omega0, const WaveDistribution* envelope) {
  if (!grid.is_spacetime() || !grid.has(AxisKind::space) || !grid.has(AxisKind::time))
    throw GridMismatch("plane_wave needs a space axis and a time axis");
  if (envelope != nullptr && !(envelope->grid() == grid)) throw GridMismatch("plane_wave envelope grid differs");
  const std::size_t xa = grid.find(AxisKind::space);
  const std::size_t ta = grid.find(AxisKind::time);
  std::vector<cplx> s(grid.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = grid.axis(xa).value(grid.coordinate_index(i, xa));
    const double t = grid.axis(ta).value(grid.coordinate_index(i, ta));
    const cplx a = envelope != nullptr ? (*envelope)[i] : cplx{1.0, 0.0};
    s[i] = a * std::polar(1.0, k0 * x - omega0 * t);
  }
  return normalized(WaveDistribution(grid, std::move(s)));
}

WaveDistribution box_momentum_state(double width, double center, double omega1, double tau, const Grid& dual) {
  if (!(width > 0.0)) throw std::invalid_argument("box_momentum_state: width must be positive");
  if (dual.rank() != 1 || dual.axis(0).kind != AxisKind::wavenumber)
    throw GridMismatch("box_momentum_state needs a single wavenumber axis");
  const auto& ax = dual.axis(0);
  const cplx global = std::polar(1.0, -omega1 * tau);
  std::vector<cplx> s(ax.n);
  for (std::size_t m = 0; m < ax.n; ++m) {
    const double k = ax.value(m);
    const double kl = k * width;
    if (std::abs(1.0 + kl) < 1e-12) throw std::domain_error("box_momentum_state: bin at the singular point kL = -1");
    const double u = (std::numbers::pi - kl) / 2.0;
    const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
    s[m] = (sinc / (1.0 + kl)) * std::polar(1.0, k * center) * global;
  }
  return normalized(WaveDistribution(dual, std::move(s)));
}

WaveDistribution unit_impulse(const Grid& grid, const std::vector<double>& at) {
  if (at.size() != grid.rank()) throw GridMismatch("unit_impulse needs one coordinate per axis");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < grid.rank(); ++a) {
    const auto& ax = grid.axis(a);
    const double start = is_frequency(ax.kind) ? 0.0 : ax.origin;
    const double pos = (at[a] - start) / ax.step;
    const auto n = static_cast<long long>(ax.n);
    long long j = std::llround(pos) % n;
    if (j < 0) j += n;
    flat += static_cast<std::size_t>(j) * grid.stride(a);
  }
  WaveDistribution d(grid);
  d[flat] = 1.0;
  return d;
}

Moments moments(const WaveDistribution& dist, std::size_t axis) {
  const Grid& g = dist.grid();
  if (axis >= g.rank()) throw GridMismatch("moments: axis out of range");
  std::vector<double> density(g.axis(axis).n);
  kernels::marginal_density(dist.samples(), g, axis, density);
  double total = 0.0;
  for (double w : density) total += w;
  if (!(total > 0.0)) throw std::domain_error("moments of a zero-norm distribution");
  double mean = 0.0;
  for (std::size_t j = 0; j < density.size(); ++j) mean += density[j] * g.axis(axis).value(j);
  mean /= total;
  double var = 0.0;
  for (std::size_t j = 0; j < density.size(); ++j) {
    const double d = g.axis(axis).value(j) - mean;
    var += density[j] * d * d;
  }
  return {mean, var / total};
}

double uncertainty_product(const WaveDistribution& dist, std::size_t axis) {
  if (axis >= dist.grid().rank() || dist.grid().axis(axis).kind != AxisKind::space)
    throw GridMismatch("uncertainty_product needs a space axis");
  const auto spread_x = moments(dist, axis).variance;
  const auto spread_k = moments(forward(dist, AxesMask::only(dist.grid(), axis)), axis).variance;
  return spread_x * spread_k;
}

GlobalPhaseFit fit_global_phase(const WaveDistribution& a, const WaveDistribution& b) {
  require_same_grid(a, b);
  const cplx overlap = kernels::inner(a.samples(), b.samples());
  GlobalPhaseFit fit;
  fit.phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  const cplx rot = std::polar(1.0, fit.phase);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(b[i] - rot * a[i]));
  fit.mismatch = m;
  return fit;
}

}  // namespace wdst
