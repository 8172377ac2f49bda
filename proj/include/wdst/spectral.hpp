#pragma once

#include <span>
#include <vector>

#include "wdst/propagator.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst {

struct ModeRecord {
  double label = 0.0;     ///< wavenumber k, or level index n
  double omega = 0.0;     ///< extracted angular frequency
  double residual = 0.0;  ///< wrapped global phase left after the counter-phase, in (-pi, pi]
  double weight = 1.0;    ///< relative spectral weight (1 for single-mode extraction)
};

/// Evolves each plane-wave mode exp(i k x) through one free split step of length tau,
/// measures the phase advance phi and returns omega = -phi / tau.
/// Throws GuardViolation("phase_wrap") if any |k^2 tau / 2m| >= pi.
std::vector<ModeRecord> extract_free_dispersion(double tau, double mass, std::span<const double> k);

struct PhaseResidual {
  double residual = 0.0;          ///< arg(<psi|U psi> exp(i omega tau)) wrapped
  double overlap_magnitude = 0.0; ///< |<psi|U psi>| / <psi|psi>
  bool not_an_eigenmode = false;  ///< overlap magnitude below 0.99
};

/// Residual global phase of one split step of length tau against a candidate frequency.
/// Zero iff the candidate satisfies the mode's dispersion relation.
PhaseResidual phase_residual(const WaveDistribution& psi, double omega, double tau, const Potential& v,
                             const PropagationOptions& opts = {});

struct SpectrumOptions {
  std::size_t zero_padding = 8;   ///< autocorrelation length multiplier before the transform
  double peak_threshold = 0.05;   ///< peaks below this fraction of the global maximum are dropped
  bool hann_window = true;
};

/// Energy levels of V = m Omega^2 x^2 / 2 by the autocorrelation method: evolve the probe
/// for `steps` strang steps over total time T, record C(t) = <psi(0)|psi(t)>, taper,
/// transform with exp(+i omega t) and return the refined peak locations in increasing
/// order, labelled 0, 1, 2, ...
///
/// Guards: "spectral_resolution" when 2 pi / T cannot separate levels Omega apart (the
/// message carries the required T); "sampling_rate" when pi / dt does not cover the
/// probe's energy band (mean + 6 sigma).
std::vector<ModeRecord> oscillator_spectrum(double omega, const Grid& grid, double total_time, std::size_t steps,
                                            const WaveDistribution& probe, const PropagationOptions& opts = {},
                                            const SpectrumOptions& spectrum = {});

/// Autocorrelation samples C(j dt), j = 0..steps-1, of `probe` under potential v.
std::vector<cplx> autocorrelation(const WaveDistribution& probe, const Potential& v, double dt, std::size_t steps,
                                  const PropagationOptions& opts = {});

/// S(omega) = sum_j w_j C_j exp(+i omega t_j) / sqrt(N) on a zero-padded frequency axis
/// (transform order), w the Hann taper.
WaveDistribution tapered_spectrum(std::span<const cplx> correlation, double dt, const SpectrumOptions& spectrum);

/// Peaks of |S(omega)| for a tapered, zero-padded autocorrelation; shared by
/// oscillator_spectrum and the CLI.
std::vector<ModeRecord> spectrum_peaks(std::span<const cplx> correlation, double dt, const SpectrumOptions& spectrum);

}  // namespace wdst
