#include "wdst/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdst::kernels {

namespace {

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

std::size_t block_count(std::size_t n) { return (n + reduction_block - 1) / reduction_block; }

int g_threads = 0;  // 0: OpenMP default

int team_size() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

}  // namespace

namespace serial {

void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale) {
  check_same(data.size(), phase.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= std::polar(1.0, scale * phase[i]);
}

void multiply(std::span<cplx> data, std::span<const cplx> factor) {
  check_same(data.size(), factor.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= factor[i];
}

void scale(std::span<cplx> data, double factor) {
  for (auto& z : data) z *= factor;
}

double norm_sq(std::span<const cplx> data) {
  double s = 0.0;
  for (const auto& z : data) s += std::norm(z);
  return s;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  check_same(a.size(), b.size());
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  check_same(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out) {
  check_same(data.size(), grid.size());
  check_same(out.size(), grid.axis(axis).n);
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) out[grid.coordinate_index(i, axis)] += std::norm(data[i]);
}

void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor) {
  check_same(data.size(), grid.size());
  check_same(factor.size(), grid.axis(axis).n);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= factor[grid.coordinate_index(i, axis)];
}

}  // namespace serial

namespace parallel {

void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale) {
  check_same(data.size(), phase.size());
  const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= std::polar(1.0, scale * phase[i]);
}

void multiply(std::span<cplx> data, std::span<const cplx> factor) {
  check_same(data.size(), factor.size());
  const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= factor[i];
}

void scale(std::span<cplx> data, double factor) {
  const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= factor;
}

double norm_sq(std::span<const cplx> data) {
  const auto blocks = static_cast<std::ptrdiff_t>(block_count(data.size()));
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const auto lo = static_cast<std::size_t>(b) * reduction_block;
    const auto hi = std::min(data.size(), lo + reduction_block);
    double s = 0.0;
    for (auto i = lo; i < hi; ++i) s += std::norm(data[i]);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  check_same(a.size(), b.size());
  const auto blocks = static_cast<std::ptrdiff_t>(block_count(a.size()));
  std::vector<cplx> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
    const auto lo = static_cast<std::size_t>(blk) * reduction_block;
    const auto hi = std::min(a.size(), lo + reduction_block);
    cplx s{};
    for (auto i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
    partial[static_cast<std::size_t>(blk)] = s;
  }
  cplx s{};
  for (const auto& p : partial) s += p;
  return s;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  check_same(a.size(), b.size());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) num_threads(team_size())
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out) {
  check_same(data.size(), grid.size());
  const auto len = grid.axis(axis).n;
  check_same(out.size(), len);
  // Each bin j owns the hyperplane of samples with index j along `axis`; the bins are
  // independent so the loop splits over j without any shared accumulator.
  const auto stride = grid.stride(axis);
  const auto outer = grid.size() / (len * stride);
  const auto bins = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t j = 0; j < bins; ++j) {
    double s = 0.0;
    for (std::size_t o = 0; o < outer; ++o) {
      const auto base = o * len * stride + static_cast<std::size_t>(j) * stride;
      for (std::size_t r = 0; r < stride; ++r) s += std::norm(data[base + r]);
    }
    out[static_cast<std::size_t>(j)] = s;
  }
}

void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor) {
  check_same(data.size(), grid.size());
  const auto len = grid.axis(axis).n;
  check_same(factor.size(), len);
  const auto stride = grid.stride(axis);
  const auto rows = static_cast<std::ptrdiff_t>(grid.size() / stride);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t row = 0; row < rows; ++row) {
    const auto f = factor[static_cast<std::size_t>(row) % len];
    auto* p = data.data() + static_cast<std::size_t>(row) * stride;
    for (std::size_t r = 0; r < stride; ++r) p[r] *= f;
  }
}

}  // namespace parallel

void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale) {
  data.size() < parallel_threshold ? serial::apply_phase(data, phase, scale)
                                   : parallel::apply_phase(data, phase, scale);
}

void multiply(std::span<cplx> data, std::span<const cplx> factor) {
  data.size() < parallel_threshold ? serial::multiply(data, factor) : parallel::multiply(data, factor);
}

void scale(std::span<cplx> data, double factor) {
  data.size() < parallel_threshold ? serial::scale(data, factor) : parallel::scale(data, factor);
}

double norm_sq(std::span<const cplx> data) {
  return data.size() < parallel_threshold ? serial::norm_sq(data) : parallel::norm_sq(data);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  return a.size() < parallel_threshold ? serial::inner(a, b) : parallel::inner(a, b);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  return a.size() < parallel_threshold ? serial::max_abs_diff(a, b) : parallel::max_abs_diff(a, b);
}

void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out) {
  // The parallel variant sums in hyperplane order, which differs from the serial flat
  // order, so the size switch here fixes the summation order per problem size.
  data.size() < parallel_threshold ? serial::marginal_density(data, grid, axis, out)
                                   : parallel::marginal_density(data, grid, axis, out);
}

void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor) {
  data.size() < parallel_threshold ? serial::multiply_along_axis(data, grid, axis, factor)
                                   : parallel::multiply_along_axis(data, grid, axis, factor);
}

void set_thread_count(int n) {
  if (n < 1) throw std::invalid_argument("thread count must be positive");
  g_threads = n;
}

int thread_count() { return team_size(); }

bool configure_threads_from_env() {
  const char* raw = std::getenv("WDST_THREADS");
  if (raw == nullptr) return true;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 4096) return false;
  set_thread_count(static_cast<int>(v));
  return true;
}

}  // namespace wdst::kernels
