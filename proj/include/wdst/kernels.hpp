#pragma once

// Data-parallel inner loops shared by every module.
//
// Each kernel exists twice: `serial::` is the plain reference loop kept for testing,
// `parallel::` is the OpenMP version. The unqualified functions dispatch on problem
// size only, never on the thread count, and the parallel reductions sum fixed-size
// blocks in a fixed order, so results are bit-identical for any WDST_THREADS value.

#include <complex>
#include <cstddef>
#include <span>

#include "wdst/grid.hpp"

namespace wdst::kernels {

using cplx = std::complex<double>;

/// Below this many samples the dispatcher runs the serial loop.
inline constexpr std::size_t parallel_threshold = 1u << 14;
/// Reduction block length of the parallel kernels.
inline constexpr std::size_t reduction_block = 2048;

namespace serial {
void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale);
void multiply(std::span<cplx> data, std::span<const cplx> factor);
void scale(std::span<cplx> data, double factor);
double norm_sq(std::span<const cplx> data);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out);
void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor);
}  // namespace serial

namespace parallel {
void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale);
void multiply(std::span<cplx> data, std::span<const cplx> factor);
void scale(std::span<cplx> data, double factor);
double norm_sq(std::span<const cplx> data);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out);
void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor);
}  // namespace parallel

/// data[i] *= exp(i * scale * phase[i])
void apply_phase(std::span<cplx> data, std::span<const double> phase, double scale = 1.0);
/// data[i] *= factor[i]
void multiply(std::span<cplx> data, std::span<const cplx> factor);
void scale(std::span<cplx> data, double factor);
/// sum |data[i]|^2
double norm_sq(std::span<const cplx> data);
/// sum conj(a[i]) * b[i]
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
/// out[j] = sum of |data|^2 over every sample whose index along `axis` is j.
void marginal_density(std::span<const cplx> data, const Grid& grid, std::size_t axis, std::span<double> out);
/// data[i] *= factor[j] where j is the index of sample i along `axis`.
void multiply_along_axis(std::span<cplx> data, const Grid& grid, std::size_t axis, std::span<const cplx> factor);

/// Sets the OpenMP team size used by the parallel kernels (n >= 1).
void set_thread_count(int n);
int thread_count();
/// Applies WDST_THREADS when set. Returns false if the variable is present but not a
/// positive integer.
bool configure_threads_from_env();

}  // namespace wdst::kernels
