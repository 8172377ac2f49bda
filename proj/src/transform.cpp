#include "wdst/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "wdst/error.hpp"
#include "wdst/kernels.hpp"

namespace wdst {

AxesMask::AxesMask(std::vector<bool> selected) : selected_(std::move(selected)) {
  bool any = false;
  for (bool b : selected_) any = any || b;
  if (!any) throw std::invalid_argument("axes mask selects no axis");
}

AxesMask AxesMask::all(const Grid& grid) { return AxesMask(std::vector<bool>(grid.rank(), true)); }

AxesMask AxesMask::only(const Grid& grid, std::size_t axis) {
  if (axis >= grid.rank()) throw GridMismatch("mask axis out of range");
  std::vector<bool> m(grid.rank(), false);
  m[axis] = true;
  return AxesMask(std::move(m));
}

AxesMask AxesMask::of_kind(const Grid& grid, AxisKind kind) {
  std::vector<bool> m(grid.rank(), false);
  for (std::size_t a = 0; a < grid.rank(); ++a) m[a] = grid.axis(a).kind == kind;
  return AxesMask(std::move(m));
}

AxesMask AxesMask::spatial(const Grid& grid) {
  std::vector<bool> m(grid.rank(), false);
  for (std::size_t a = 0; a < grid.rank(); ++a) {
    const auto k = grid.axis(a).kind;
    m[a] = k == AxisKind::space || k == AxisKind::wavenumber;
  }
  return AxesMask(std::move(m));
}

namespace {

// Plans are created under a lock (the FFTW planner is not thread-safe) and kept for the
// life of the process. FFTW_UNALIGNED lets one plan run on any caller buffer;
// FFTW_ESTIMATE keeps the algorithm choice, and hence the output bits, deterministic.
class PlanCache {
 public:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, int>;  // n, stride, rows, sign

  fftw_plan get(std::size_t n, std::size_t stride, std::size_t outer, int sign) {
    const Key key{n, stride, outer, sign};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const std::size_t total = n * stride * outer;
    auto* scratch = fftw_alloc_complex(total);
    fftw_iodim dim{static_cast<int>(n), static_cast<int>(stride), static_cast<int>(stride)};
    fftw_iodim loops[2] = {
        {static_cast<int>(outer), static_cast<int>(n * stride), static_cast<int>(n * stride)},
        {static_cast<int>(stride), 1, 1},
    };
    fftw_plan plan = fftw_plan_guru_dft(1, &dim, 2, loops, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return plans_.size();
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void run_dft(std::span<cplx> data, const Grid& grid, std::size_t axis, int sign) {
  const auto n = grid.axis(axis).n;
  const auto stride = grid.stride(axis);
  const auto outer = grid.size() / (n * stride);
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(n, stride, outer, sign), p, p);
}

// exp(sign * i * f_m * origin) / sqrt(n) for each bin m, with f_m * origin evaluated as
// 2*pi * m * (origin/step) / n reduced modulo n to keep the argument small.
std::vector<cplx> origin_phase(const AxisSpec& dual_axis, double sign) {
  const auto n = dual_axis.n;
  const double spatial_step = 2.0 * std::numbers::pi / (static_cast<double>(n) * dual_axis.step);
  double ratio = dual_axis.origin / spatial_step;
  // The spatial step recovered from the dual step can be off by an ulp; snap whole-step
  // origins back to integers so on-grid shifts stay exact.
  if (const double r = std::round(ratio); std::abs(ratio - r) <= 1e-9 * std::max(1.0, std::abs(r))) ratio = r;
  const double dn = static_cast<double>(n);
  const double norm = 1.0 / std::sqrt(dn);
  std::vector<cplx> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double bin = std::round(dual_axis.value(m) / dual_axis.step);
    const double turns = std::fmod(bin * ratio, dn);
    out[m] = std::polar(norm, sign * 2.0 * std::numbers::pi * turns / dn);
  }
  return out;
}

}  // namespace

WaveDistribution forward(const WaveDistribution& dist, const AxesMask& mask) {
  const Grid& grid = dist.grid();
  if (mask.size() != grid.rank()) throw GridMismatch("mask length differs from grid rank");
  for (std::size_t a = 0; a < grid.rank(); ++a)
    if (mask[a] && is_frequency(grid.axis(a).kind))
      throw GridMismatch("forward transform of an axis that is already in the frequency domain");

  WaveDistribution out = dist;
  const Grid dual = dual_of(grid, mask.bits());
  for (std::size_t a = 0; a < grid.rank(); ++a) {
    if (!mask[a]) continue;
    const bool time = grid.axis(a).kind == AxisKind::time;
    // Space: exp(-ikx) is FFTW's forward sign. Time: exp(+iwt) is its backward sign.
    run_dft(out.samples(), grid, a, time ? FFTW_BACKWARD : FFTW_FORWARD);
    kernels::multiply_along_axis(out.samples(), grid, a, origin_phase(dual.axis(a), time ? 1.0 : -1.0));
  }
  out.relabel(dual);
  return out;
}

WaveDistribution inverse(const WaveDistribution& dist, const AxesMask& mask) {
  const Grid& grid = dist.grid();
  if (mask.size() != grid.rank()) throw GridMismatch("mask length differs from grid rank");
  for (std::size_t a = 0; a < grid.rank(); ++a)
    if (mask[a] && !is_frequency(grid.axis(a).kind))
      throw GridMismatch("inverse transform of an axis that is not in the frequency domain");

  WaveDistribution out = dist;
  for (std::size_t a = 0; a < grid.rank(); ++a) {
    if (!mask[a]) continue;
    const bool time = grid.axis(a).kind == AxisKind::angular_frequency;
    kernels::multiply_along_axis(out.samples(), grid, a, origin_phase(grid.axis(a), time ? -1.0 : 1.0));
    run_dft(out.samples(), grid, a, time ? FFTW_FORWARD : FFTW_BACKWARD);
  }
  out.relabel(dual_of(grid, mask.bits()));
  return out;
}

WaveDistribution convolve(const WaveDistribution& a, const WaveDistribution& b, const AxesMask& mask) {
  require_same_grid(a, b);
  auto fa = forward(a, mask);
  const auto fb = forward(b, mask);
  kernels::multiply(fa.samples(), fb.samples());
  double count = 1.0;
  for (std::size_t ax = 0; ax < a.grid().rank(); ++ax)
    if (mask[ax]) count *= static_cast<double>(a.grid().axis(ax).n);
  kernels::scale(fa.samples(), std::sqrt(count));
  return inverse(fa, mask);
}

std::size_t cached_plan_count() { return plan_cache().size(); }

}  // namespace wdst
