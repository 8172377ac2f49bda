#include "wdst/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/kernels.hpp"
#include "wdst/transform.hpp"

namespace wdst {

namespace {

constexpr double pi = std::numbers::pi;

// One-dimensional grid of 16 samples on which k sits exactly on bin 1.
Grid mode_grid(double k) {
  constexpr std::size_t n = 16;
  const double dx = k == 0.0 ? 1.0 : 2.0 * pi / (static_cast<double>(n) * std::abs(k));
  return Grid({centered_axis(AxisKind::space, n, dx)});
}

}  // namespace

PhaseResidual phase_residual(const WaveDistribution& psi, double omega, double tau, const Potential& v,
                             const PropagationOptions& opts) {
  const auto evolved = split_step(psi, v, tau, 1, opts);
  const cplx overlap = kernels::inner(psi.samples(), evolved.samples()) / psi.norm_sq();
  PhaseResidual r;
  r.overlap_magnitude = std::abs(overlap);
  r.residual = wrap_phase(std::arg(overlap) + omega * tau);
  r.not_an_eigenmode = r.overlap_magnitude < 0.99;
  return r;
}

std::vector<ModeRecord> extract_free_dispersion(double tau, double mass, std::span<const double> k) {
  if (!(tau > 0.0) || !(mass > 0.0)) throw std::invalid_argument("extract_free_dispersion: tau and mass must be positive");
  for (double kv : k)
    if (!(std::abs(kv * kv * tau / (2.0 * mass)) < pi))
      throw GuardViolation("phase_wrap", "k = " + std::to_string(kv) + " advances the phase by more than pi");

  PropagationOptions opts;
  opts.mass = mass;
  std::vector<ModeRecord> out;
  out.reserve(k.size());
  for (double kv : k) {
    const Grid g = mode_grid(kv);
    const double k_bin = kv == 0.0 ? 0.0 : std::copysign(dual_of(g.axis(0)).step, kv);
    std::vector<cplx> s(g.size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::polar(1.0, k_bin * g.axis(0).value(j));
    const auto mode = normalized(WaveDistribution(g, std::move(s)));
    const auto free = Potential::zero(g);

    const auto evolved = split_step(mode, free, tau, 1, opts);
    const double advance = std::arg(kernels::inner(mode.samples(), evolved.samples()));
    ModeRecord rec;
    rec.label = kv;
    rec.omega = -advance / tau;
    rec.residual = phase_residual(mode, rec.omega, tau, free, opts).residual;
    out.push_back(rec);
  }
  return out;
}

std::vector<cplx> autocorrelation(const WaveDistribution& probe, const Potential& v, double dt, std::size_t steps,
                                  const PropagationOptions& opts) {
  std::vector<cplx> c(steps);
  WaveDistribution state = probe;
  const double n2 = probe.norm_sq();
  for (std::size_t j = 0; j < steps; ++j) {
    if (j > 0) state = split_step(state, v, dt, 1, opts);
    c[j] = kernels::inner(probe.samples(), state.samples()) / n2;
  }
  return c;
}

namespace {

std::vector<double> taper(std::size_t steps, bool hann) {
  std::vector<double> window(steps, 1.0);
  if (hann)
    for (std::size_t j = 0; j < steps; ++j)
      window[j] = 0.5 * (1.0 - std::cos(2.0 * pi * static_cast<double>(j) / static_cast<double>(steps - 1)));
  return window;
}

}  // namespace

WaveDistribution tapered_spectrum(std::span<const cplx> correlation, double dt, const SpectrumOptions& spectrum) {
  const std::size_t steps = correlation.size();
  if (steps < 4) throw std::invalid_argument("spectrum needs at least 4 autocorrelation samples");
  if (!(dt > 0.0)) throw std::invalid_argument("spectrum: dt must be positive");
  std::size_t padded = 1;
  while (padded < steps * std::max<std::size_t>(1, spectrum.zero_padding)) padded <<= 1;
  const auto window = taper(steps, spectrum.hann_window);
  std::vector<cplx> tapered(padded);
  for (std::size_t j = 0; j < steps; ++j) tapered[j] = window[j] * correlation[j];
  const Grid tgrid({AxisSpec{AxisKind::time, padded, dt, 0.0}});
  return forward(WaveDistribution(tgrid, std::move(tapered)), AxesMask::all(tgrid));
}

std::vector<ModeRecord> spectrum_peaks(std::span<const cplx> correlation, double dt, const SpectrumOptions& spectrum) {
  const std::size_t steps = correlation.size();
  const auto spec = tapered_spectrum(correlation, dt, spectrum);
  const auto window = taper(steps, spectrum.hann_window);
  const std::size_t padded = spec.size();

  // Reorder into increasing frequency.
  const auto& wax = spec.grid().axis(0);
  const std::size_t shift = padded - padded / 2;
  std::vector<double> mag(padded);
  std::vector<double> freq(padded);
  for (std::size_t i = 0; i < padded; ++i) {
    const std::size_t m = (i + shift) % padded;
    mag[i] = std::abs(spec[m]);
    freq[i] = wax.value(m);
  }
  const double top = *std::max_element(mag.begin(), mag.end());
  const double bin = wax.step;

  std::vector<ModeRecord> peaks;
  for (std::size_t i = 1; i + 1 < padded; ++i) {
    if (!(mag[i] > mag[i - 1] && mag[i] >= mag[i + 1])) continue;
    if (mag[i] < spectrum.peak_threshold * top) continue;
    const double ym = mag[i - 1], y0 = mag[i], yp = mag[i + 1];
    const double denom = ym - 2.0 * y0 + yp;
    const double delta = denom != 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
    ModeRecord rec;
    rec.omega = freq[i] + delta * bin;
    rec.weight = (y0 - 0.25 * (ym - yp) * delta) / top;
    cplx demod{};
    for (std::size_t j = 0; j < steps; ++j)
      demod += window[j] * correlation[j] * std::polar(1.0, rec.omega * dt * static_cast<double>(j));
    rec.residual = wrap_phase(std::arg(demod));
    peaks.push_back(rec);
  }
  for (std::size_t n = 0; n < peaks.size(); ++n) peaks[n].label = static_cast<double>(n);
  return peaks;
}

std::vector<ModeRecord> oscillator_spectrum(double omega, const Grid& grid, double total_time, std::size_t steps,
                                            const WaveDistribution& probe, const PropagationOptions& opts,
                                            const SpectrumOptions& spectrum) {
  if (!(omega > 0.0) || !(total_time > 0.0) || steps < 4)
    throw std::invalid_argument("oscillator_spectrum: omega, T must be positive and steps >= 4");
  if (!(probe.grid() == grid)) throw GridMismatch("oscillator_spectrum: probe grid differs");

  // A Hann main lobe spans +-2 bins of 2 pi / T; adjacent levels must clear it.
  const double required_time = 4.0 * pi / omega;
  if (total_time < required_time) {
    std::ostringstream msg;
    msg << "T = " << total_time << " cannot resolve level spacing " << omega << "; need T >= " << required_time;
    throw GuardViolation("spectral_resolution", msg.str());
  }

  const auto v = Potential::harmonic(grid, opts.mass, omega);
  const double dt = total_time / static_cast<double>(steps);

  // Probe energy band from <H> and <H^2> = |H psi|^2 (both computed spectrally).
  {
    const auto mask = AxesMask::all(grid);
    const auto p = normalized(probe);
    auto kin = forward(p, mask);
    const auto k2 = wavenumber_squared(kin.grid());
    for (std::size_t i = 0; i < kin.size(); ++i) kin[i] *= k2[i] / (2.0 * opts.mass);
    auto h = inverse(kin, mask);
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += v.values()[i] * p[i];
    const double mean = kernels::inner(p.samples(), h.samples()).real();
    const double spread = std::sqrt(std::max(0.0, h.norm_sq() - mean * mean));
    const double band = std::abs(mean) + 6.0 * spread;
    if (pi / dt < band) {
      std::ostringstream msg;
      msg << "Nyquist frequency " << pi / dt << " below the probe energy band " << band << "; raise steps";
      throw GuardViolation("sampling_rate", msg.str());
    }
  }

  const auto c = autocorrelation(probe, v, dt, steps, opts);
  return spectrum_peaks(c, dt, spectrum);
}

}  // namespace wdst
