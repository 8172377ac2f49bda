#include "wdst/cli/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "wdst/cli/array_io.hpp"
#include "wdst/diffraction.hpp"
#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/interaction.hpp"
#include "wdst/kernels.hpp"
#include "wdst/propagator.hpp"
#include "wdst/spectral.hpp"
#include "wdst/transform.hpp"
#include "wdst/twostate.hpp"

namespace wdst::cli {

namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite metric value");
  std::ostringstream s;
  s.precision(17);
  s << (v == 0.0 ? 0.0 : v);  // no signed zero in summaries
  return s.str();
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt(v[i]);
  return out;
}

// Output sink for one run: collects file names and metrics.
class Run {
 public:
  Run(std::string dir, RunSummary& summary) : dir_(std::move(dir)), summary_(summary) {}

  void wdst(const std::string& name, const WaveDistribution& d) {
    write_wdst(path(name), d);
    summary_.files.push_back(name);
  }
  void csv(const std::string& name, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& columns) {
    write_csv(path(name), header, columns);
    summary_.files.push_back(name);
  }
  void metric(const std::string& name, double v) { summary_.metrics.emplace_back(name, fmt(v)); }
  void metric(const std::string& name, const std::string& v) { summary_.metrics.emplace_back(name, v); }

 private:
  std::string path(const std::string& name) const { return (fs::path(dir_) / name).string(); }
  std::string dir_;
  RunSummary& summary_;
};

PropagationOptions propagation(const Parameters& p) {
  PropagationOptions o;
  o.mass = p.real("mass");
  const auto& scheme = p.text("scheme");
  if (scheme == "strang")
    o.scheme = SplitScheme::strang;
  else if (scheme == "lie")
    o.scheme = SplitScheme::lie;
  else
    throw ConfigError("scheme must be 'strang' or 'lie', got '" + scheme + "'");
  const auto& sign = p.text("potential_sign");
  if (sign == "physical")
    o.potential_sign = PotentialSign::physical;
  else if (sign == "literal")
    o.potential_sign = PotentialSign::literal;
  else
    throw ConfigError("potential_sign must be 'physical' or 'literal', got '" + sign + "'");
  if (!(o.mass > 0.0)) throw ConfigError("mass must be positive");
  return o;
}

double positive(const Parameters& p, const std::string& key) {
  const double v = p.real(key);
  if (!(v > 0.0)) throw ConfigError("'" + key + "' must be positive");
  return v;
}

Grid line_grid(const Parameters& p) {
  const std::size_t n = p.count("grid.n");
  if (n < 2) throw ConfigError("grid.n must be at least 2");
  return Grid({centered_axis(AxisKind::space, n, positive(p, "grid.length") / static_cast<double>(n))});
}

std::vector<double> axis_values(const AxisSpec& ax) {
  std::vector<double> v(ax.n);
  for (std::size_t j = 0; j < ax.n; ++j) v[j] = ax.value(j);
  return v;
}

std::vector<double> density(const WaveDistribution& d) {
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::norm(d[i]);
  return v;
}

double relative_l2(const WaveDistribution& a, const WaveDistribution& ref) {
  double num = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) num += std::norm(a[i] - ref[i]);
  return std::sqrt(num / ref.norm_sq());
}

// ---------------------------------------------------------------------------------------

void free_gaussian(const Parameters& p, Run& run) {
  const Grid grid = line_grid(p);
  const auto opts = propagation(p);
  const double sigma = positive(p, "sigma");
  const double k0 = p.real("k0");
  const double x0 = p.real("x0");
  const double total = positive(p, "time");
  const std::size_t steps = p.count("steps");

  const auto initial = gaussian_packet(grid, CoordinateInterval::event(x0, 0.0), k0, 0.0, sigma);
  const auto final_state = split_step(initial, Potential::zero(grid), total / static_cast<double>(steps), steps, opts);
  const auto analytic = analytic_free_gaussian(grid, x0, k0, sigma, opts.mass, total);

  run.wdst("initial.wdst", initial);
  run.wdst("final.wdst", final_state);
  run.wdst("analytic.wdst", analytic);
  run.csv("density.csv", {"x", "density", "analytic_density"},
          {axis_values(grid.axis(0)), density(final_state), density(analytic)});

  run.metric("l2_error_vs_analytic", relative_l2(final_state, analytic));
  run.metric("norm_drift", std::abs(final_state.norm_sq() - 1.0));
  run.metric("final_width", std::sqrt(moments(final_state, 0).variance));
}

void harmonic_oscillator(const Parameters& p, Run& run) {
  const Grid grid = line_grid(p);
  const auto opts = propagation(p);
  const double omega = positive(p, "omega");
  const double total = positive(p, "time");
  const std::size_t steps = p.count("steps");
  const std::size_t levels = p.count("levels");
  SpectrumOptions sopts;
  sopts.zero_padding = p.count("zero_padding");

  const auto probe = gaussian_packet(grid, CoordinateInterval::event(p.real("displacement"), 0.0), 0.0, 0.0,
                                     1.0 / std::sqrt(opts.mass * omega));
  const auto peaks = oscillator_spectrum(omega, grid, total, steps, probe, opts, sopts);

  const double dt = total / static_cast<double>(steps);
  const auto corr = autocorrelation(probe, Potential::harmonic(grid, opts.mass, omega), dt, steps, opts);
  const auto spec = tapered_spectrum(corr, dt, sopts);

  std::vector<double> t(steps), re(steps), im(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    t[j] = static_cast<double>(j) * dt;
    re[j] = corr[j].real();
    im[j] = corr[j].imag();
  }
  const auto& wax = spec.grid().axis(0);
  std::vector<double> w(wax.n), mag(wax.n);
  const std::size_t shift = wax.n - wax.n / 2;
  for (std::size_t i = 0; i < wax.n; ++i) {
    const std::size_t m = (i + shift) % wax.n;
    w[i] = wax.value(m);
    mag[i] = std::abs(spec[m]);
  }
  std::vector<double> n(peaks.size()), pw(peaks.size()), expected(peaks.size()), weight(peaks.size()),
      residual(peaks.size());
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    n[i] = peaks[i].label;
    pw[i] = peaks[i].omega;
    expected[i] = omega * (peaks[i].label + 0.5);
    weight[i] = peaks[i].weight;
    residual[i] = peaks[i].residual;
  }
  run.wdst("probe.wdst", probe);
  run.wdst("spectrum.wdst", spec);
  run.csv("autocorrelation.csv", {"t", "re", "im"}, {t, re, im});
  run.csv("spectrum.csv", {"omega", "magnitude"}, {w, mag});
  run.csv("peaks.csv", {"n", "omega", "expected", "weight", "residual"}, {n, pw, expected, weight, residual});

  if (peaks.size() < levels)
    throw GuardViolation("peak_count", "found " + std::to_string(peaks.size()) + " peaks, expected " +
                                           std::to_string(levels) + "; widen the probe or lower levels");
  double worst = 0.0;
  for (std::size_t i = 0; i < levels; ++i) worst = std::max(worst, std::abs(pw[i] - expected[i]));
  run.metric("peaks", join(pw));
  run.metric("peak_count", static_cast<double>(peaks.size()));
  run.metric("max_level_error", worst);
  run.metric("frequency_resolution", 2.0 * pi / total);
}

void dispersion_scan(const Parameters& p, Run& run) {
  const double tau = positive(p, "tau");
  const double mass = positive(p, "mass");
  const double kmin = p.real("k.min");
  const double kmax = p.real("k.max");
  const std::size_t count = p.count("k.count");
  if (kmax < kmin) throw ConfigError("k.max must not be below k.min");
  std::vector<double> k(count);
  for (std::size_t i = 0; i < count; ++i)
    k[i] = count == 1 ? kmin : kmin + (kmax - kmin) * static_cast<double>(i) / static_cast<double>(count - 1);

  const auto modes = extract_free_dispersion(tau, mass, k);
  std::vector<double> w(count), exact(count), res(count);
  double worst_rel = 0.0, worst_res = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    w[i] = modes[i].omega;
    exact[i] = k[i] * k[i] / (2.0 * mass);
    res[i] = modes[i].residual;
    const double err = std::abs(w[i] - exact[i]);
    worst_rel = std::max(worst_rel, exact[i] > 0.0 ? err / exact[i] : err);
    worst_res = std::max(worst_res, std::abs(res[i]));
  }
  run.csv("dispersion.csv", {"k", "omega", "analytic", "residual"}, {k, w, exact, res});
  run.metric("max_relative_error", worst_rel);
  run.metric("max_abs_residual", worst_res);
}

void two_state(const Parameters& p, Run& run) {
  TwoLevelSystem sys{p.real("e1"), p.real("e2"), p.real("v0"), p.real("omega_d")};
  sys.validate();
  const double tau = positive(p, "tau");
  const double dt = positive(p, "oracle.dt");
  const ScanRange range{p.real("scan.start"), p.real("scan.stop"), positive(p, "scan.step")};

  ScanOptions closed;
  const auto prof_closed = resonance_scan(sys, range, tau, closed);
  ScanOptions oracle;
  oracle.method = ScanMethod::oracle;
  oracle.oracle_dt = dt;
  const auto prof_oracle = resonance_scan(sys, range, tau, oracle);
  if (std::isnan(prof_oracle.null_below) || std::isnan(prof_oracle.null_above))
    throw GuardViolation("scan_range", "the scan does not reach a null on both sides of the peak");

  const auto first = first_order_amplitude(sys, tau);
  const auto exact = tdse_oracle(sys, tau, dt);
  const cplx second = second_order_coefficient(sys, tau);
  const cplx residual = exact.c1 - first.c1;

  // Window sampled over [-tau, 2 tau] so both edges are visible.
  constexpr std::size_t window_samples = 3001;
  const AxisSpec window_axis{AxisKind::time, window_samples, 3.0 * tau / static_cast<double>(window_samples - 1), -tau};
  const Grid wgrid({window_axis});
  run.wdst("window.wdst", WaveDistribution(wgrid, windowed_potential(sys, tau, window_axis)));
  run.csv("resonance.csv", {"omega_d", "closed_form", "oracle"},
          {prof_closed.omega_d, prof_closed.power, prof_oracle.power});

  run.metric("omega_mn", sys.omega_mn());
  run.metric("peak_omega_closed_form", prof_closed.peak_omega);
  run.metric("peak_omega_oracle", prof_oracle.peak_omega);
  run.metric("null_below", prof_oracle.null_below);
  run.metric("null_above", prof_oracle.null_above);
  run.metric("first_order_c2_abs", std::abs(first.c2));
  run.metric("oracle_c2_abs", std::abs(exact.c2));
  run.metric("first_order_error", std::abs(exact.c2 - first.c2));
  run.metric("oracle_norm_drift", std::abs(exact.norm_sq() - 1.0));
  run.metric("second_order_re", second.real());
  run.metric("second_order_im", second.imag());
  run.metric("second_order_relative_mismatch",
             std::abs(residual) > 0.0 ? std::abs(second - residual) / std::abs(residual) : std::abs(second));
}

}  // namespace

double central_lobe_halfwidth(const std::vector<double>& x, const std::vector<double>& intensity) {
  const auto peak = static_cast<std::size_t>(std::max_element(intensity.begin(), intensity.end()) - intensity.begin());
  const double floor = 0.05 * intensity[peak];
  for (std::size_t i = peak + 1; i + 1 < intensity.size(); ++i) {
    const double ym = intensity[i - 1], y0 = intensity[i], yp = intensity[i + 1];
    if (y0 > floor || y0 > ym || y0 > yp) continue;
    const double denom = ym - 2.0 * y0 + yp;
    const double delta = denom > 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
    return x[i] + delta * (x[i + 1] - x[i]) - x[peak];
  }
  throw GuardViolation("fringe_range", "no first null inside the grid; enlarge grid.n");
}

namespace {

void single_slit(const Parameters& p, Run& run) {
  const std::size_t n = p.count("grid.n");
  const Grid grid({centered_axis(AxisKind::space, n, positive(p, "grid.step"))});
  const double mass = positive(p, "mass");
  const double delta = p.real("delta");

  const auto incident = WaveDistribution(grid, std::vector<cplx>(grid.size(), 1.0));
  const auto transmitted = apply_aperture(incident, Aperture::slit(grid, positive(p, "slit.width")));
  const auto pupil = fresnel_transfer(dual_of(grid), delta, mass);
  const auto screen = propagate_wavefront(transmitted, pupil);
  const auto via_impulse = convolve(impulse_from_pupil(pupil), transmitted, AxesMask::all(grid));

  const auto x = axis_values(grid.axis(0));
  const auto intensity = density(screen);
  run.wdst("transmitted.wdst", transmitted);
  run.wdst("screen.wdst", screen);
  run.csv("intensity.csv", {"x", "intensity"}, {x, intensity});
  run.metric("central_lobe_halfwidth", central_lobe_halfwidth(x, intensity));
  run.metric("power_ratio", screen.norm_sq() / transmitted.norm_sq());
  run.metric("convolution_route_diff", kernels::max_abs_diff(screen.samples(), via_impulse.samples()));
}

void delayed_choice(const Parameters& p, Run& run) {
  const Grid grid = make_spacetime_grid({centered_axis(AxisKind::space, p.count("grid.x.n"), positive(p, "grid.x.step")),
                                         centered_axis(AxisKind::time, p.count("grid.t.n"), positive(p, "grid.t.step"))});
  const double k0 = p.real("k0");
  const double omega0 = p.real("omega0");
  const auto envelope = gaussian_packet(grid, CoordinateInterval::event(0.0, 0.0), 0.0, 0.0, positive(p, "envelope.sigma"));
  const auto state = plane_wave(grid, k0, omega0, &envelope);

  std::vector<CoordinateInterval> segments;
  for (const auto& [x, t] : p.pairs("segments")) segments.push_back(CoordinateInterval::event(x, t, segments.size()));

  WaveDistribution sequential = state;
  for (const auto& seg : segments) sequential = detect(sequential, seg);
  const auto composed =
      interact(state, PhaseMap::zero(PhaseDomain::spacetime), compose_path(segments));

  double ex = 0.0, et = 0.0;
  for (const auto& seg : segments) {
    ex += seg.spacetime().x;
    et += seg.spacetime().t;
  }
  const auto endpoint = CoordinateInterval::event(ex, et);
  const cplx overlap = kernels::inner(state.samples(), detect(state, endpoint).samples());

  run.wdst("initial.wdst", state);
  run.wdst("sequential.wdst", sequential);
  run.wdst("composed.wdst", composed);
  run.metric("composition_maxabs_diff", kernels::max_abs_diff(sequential.samples(), composed.samples()));
  run.metric("endpoint_phase_residual", wrap_phase(std::arg(overlap)));
  if (k0 != 0.0) {
    const TrajectoryConstraint traj(k0, omega0);
    run.metric("trajectory_velocity", traj.velocity());
    run.metric("endpoint_admissible", traj.admissible(endpoint) ? 1.0 : 0.0);
  }
}

void uncertainty_suite(const Parameters& p, Run& run) {
  const Grid grid = line_grid(p);
  const auto seed = static_cast<unsigned long long>(p.integer("seed"));
  const auto gaussian = gaussian_packet(grid, CoordinateInterval::event(0.0, 0.0), 0.0, 0.0, positive(p, "sigma"));
  const double g_product = uncertainty_product(gaussian, 0);

  const auto states = random_localized_states(grid, p.count("random.count"), seed);
  std::vector<double> idx, vx, vk, prod;
  std::size_t violations = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double var_x = moments(states[i], 0).variance;
    const double var_k = moments(forward(states[i], AxesMask::all(grid)), 0).variance;
    idx.push_back(static_cast<double>(i));
    vx.push_back(var_x);
    vk.push_back(var_k);
    prod.push_back(var_x * var_k);
    lowest = std::min(lowest, var_x * var_k);
    if (var_x * var_k < 0.25 - 1e-9) ++violations;
  }
  run.wdst("gaussian.wdst", gaussian);
  run.csv("products.csv", {"index", "var_x", "var_k", "product"}, {idx, vx, vk, prod});
  run.metric("gaussian_product", g_product);
  run.metric("gaussian_product_error", std::abs(g_product - 0.25));
  run.metric("min_random_product", lowest);
  run.metric("bound_violations", static_cast<double>(violations));
}

// ---------------------------------------------------------------------------------------

struct Scenario {
  ScenarioInfo info;
  std::vector<ParamSpec> params;
  std::function<void(const Parameters&, Run&)> body;
};

std::vector<ParamSpec> with_common(std::vector<ParamSpec> params) {
  params.insert(params.begin(), {{"scenario", "", "scenario name"}, {"output.dir", "wdst_out", "output directory"}});
  return params;
}

const std::vector<ParamSpec> propagation_keys = {
    {"mass", "1", "particle mass"},
    {"scheme", "strang", "strang or lie"},
    {"potential_sign", "physical", "physical exp(-iV tau) or literal exp(+iV tau)"},
};

std::vector<ParamSpec> plus(std::vector<ParamSpec> a, const std::vector<ParamSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> all = {
      {{"free_gaussian", "split-step spreading of a free Gaussian against the analytic solution"},
       with_common(plus({{"grid.n", "1024", "samples"},
                         {"grid.length", "40", "box length"},
                         {"sigma", "1", "initial width"},
                         {"k0", "0", "carrier wavenumber"},
                         {"x0", "0", "initial centre"},
                         {"time", "1", "total evolution time"},
                         {"steps", "100", "split steps"}},
                        propagation_keys)),
       free_gaussian},
      {{"harmonic_oscillator", "oscillator energy levels from the autocorrelation spectrum of a coherent state"},
       with_common(plus({{"grid.n", "512", "samples"},
                         {"grid.length", "20", "box length"},
                         {"omega", "1", "oscillator frequency"},
                         {"displacement", "2.2360679774997898", "coherent-state displacement"},
                         {"time", "200", "autocorrelation length"},
                         {"steps", "4000", "autocorrelation samples"},
                         {"zero_padding", "8", "zero-padding factor"},
                         {"levels", "5", "levels checked against omega (n + 1/2)"}},
                        propagation_keys)),
       harmonic_oscillator},
      {{"dispersion_scan", "free dispersion omega(k) from the global phase of one split step per mode"},
       with_common({{"tau", "0.1", "step length"},
                    {"mass", "1", "particle mass"},
                    {"k.min", "-6", "lowest wavenumber"},
                    {"k.max", "6", "highest wavenumber"},
                    {"k.count", "25", "number of modes"}}),
       dispersion_scan},
      {{"two_state", "driven two-level resonance scan with first-order, second-order and direct-integration results"},
       with_common({{"e1", "0", "lower level energy"},
                    {"e2", "1", "upper level energy"},
                    {"v0", "0.01", "drive amplitude"},
                    {"omega_d", "1", "drive frequency for the single-point amplitudes"},
                    {"tau", "10", "drive window length"},
                    {"oracle.dt", "0.001", "direct-integration step"},
                    {"scan.start", "0", "first drive frequency"},
                    {"scan.stop", "2", "last drive frequency"},
                    {"scan.step", "0.01", "drive frequency step"}}),
       two_state},
      {{"single_slit", "Fresnel diffraction of a plane wave through a slit, pupil and impulse-response routes"},
       with_common({{"grid.n", "32768", "samples"},
                    {"grid.step", "0.0625", "sample spacing"},
                    {"slit.width", "1", "slit width"},
                    {"delta", "10", "propagation parameter"},
                    {"mass", "1", "mass in the Fresnel kernel"}}),
       single_slit},
      {{"delayed_choice", "sequential detections against one composed path phase map"},
       with_common({{"grid.x.n", "128", "space samples"},
                    {"grid.x.step", "0.25", "space step"},
                    {"grid.t.n", "64", "time samples"},
                    {"grid.t.step", "0.25", "time step"},
                    {"k0", "0.78539816339744828", "carrier wavenumber"},
                    {"omega0", "0.78539816339744828", "carrier frequency"},
                    {"envelope.sigma", "3", "spatial envelope width"},
                    {"segments", "1,1;2,1", "x,t intervals separated by ';'"}}),
       delayed_choice},
      {{"uncertainty_suite", "position-wavenumber variance products of a Gaussian and seeded random states"},
       with_common({{"grid.n", "1024", "samples"},
                    {"grid.length", "40", "box length"},
                    {"sigma", "1", "reference Gaussian width"},
                    {"random.count", "100", "random states"},
                    {"seed", "12345", "random seed"}}),
       uncertainty_suite},
  };
  return all;
}

const Scenario& find_scenario(const std::string& name) {
  for (const auto& s : registry())
    if (s.info.name == name) return s;
  throw ConfigError("unknown scenario '" + name + "'");
}

}  // namespace

const std::vector<ScenarioInfo>& list_scenarios() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> v;
    for (const auto& s : registry()) v.push_back(s.info);
    return v;
  }();
  return infos;
}

std::vector<ParamSpec> scenario_schema(const std::string& name) { return find_scenario(name).params; }

const std::string& RunSummary::metric(const std::string& name) const {
  for (const auto& [k, v] : metrics)
    if (k == name) return v;
  throw std::out_of_range("no metric '" + name + "'");
}

RunSummary run_scenario(const Config& config, const std::string& out_dir) {
  const auto& scenario = find_scenario(config.raw("scenario"));
  Config effective = config;
  if (!out_dir.empty()) effective.set("output.dir", out_dir);
  const Parameters params(effective, scenario.params);

  RunSummary summary;
  summary.scenario = scenario.info.name;
  summary.parameters = params.echo();
  summary.output_dir = params.text("output.dir");
  std::error_code ec;
  fs::create_directories(summary.output_dir, ec);
  if (ec || !fs::is_directory(summary.output_dir))
    throw ConfigError("cannot create output directory '" + summary.output_dir + "'");

  Run run(summary.output_dir, summary);
  const auto start = std::chrono::steady_clock::now();
  scenario.body(params, run);
  summary.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  summary.files.push_back("summary.txt");
  std::sort(summary.files.begin(), summary.files.end());
  std::ofstream out(fs::path(summary.output_dir) / "summary.txt", std::ios::trunc);
  out << format_summary(summary);
  if (!out) throw std::runtime_error("cannot write summary.txt");
  return summary;
}

std::string format_summary(const RunSummary& summary) {
  std::ostringstream s;
  s.precision(17);
  s << "scenario = " << summary.scenario << '\n';
  s << "wall_time_s = " << summary.wall_time_s << '\n';
  for (const auto& [k, v] : summary.parameters) s << "param." << k << " = " << v << '\n';
  for (const auto& [k, v] : summary.metrics) s << "metric." << k << " = " << v << '\n';
  s << "files = ";
  for (std::size_t i = 0; i < summary.files.size(); ++i) s << (i ? "," : "") << summary.files[i];
  s << '\n';
  return s.str();
}

WaveDistribution analytic_free_gaussian(const Grid& grid, double x0, double k0, double sigma, double mass, double t) {
  if (grid.rank() != 1 || grid.axis(0).kind != AxisKind::space)
    throw GridMismatch("analytic_free_gaussian needs a single space axis");
  const auto& ax = grid.axis(0);
  const cplx spread{1.0, t / (mass * sigma * sigma)};
  const double v = k0 / mass;
  const double span = ax.span();
  std::vector<cplx> s(ax.n);
  for (std::size_t j = 0; j < ax.n; ++j) {
    const double x = ax.value(j);
    double d = x - x0 - v * t;
    d -= span * std::round(d / span);
    const cplx arg = -d * d / (2.0 * sigma * sigma * spread) + cplx{0.0, k0 * x - 0.5 * k0 * k0 * t / mass};
    s[j] = std::exp(arg) / std::sqrt(spread);
  }
  return normalized(WaveDistribution(grid, std::move(s)));
}

std::vector<WaveDistribution> random_localized_states(const Grid& grid, std::size_t count, unsigned long long seed) {
  if (grid.rank() != 1 || grid.axis(0).kind != AxisKind::space)
    throw GridMismatch("random_localized_states needs a single space axis");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& ax = grid.axis(0);
  const double half = 0.5 * ax.span();
  std::vector<WaveDistribution> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    const double width = 0.5 + 1.5 * unit(rng);
    const double centre = (unit(rng) - 0.5) * 0.3 * half;
    const auto terms = 1 + static_cast<std::size_t>(unit(rng) * 4.0) % 4;
    std::vector<cplx> amp(terms);
    std::vector<double> kw(terms);
    for (std::size_t j = 0; j < terms; ++j) {
      amp[j] = std::polar(0.2 + unit(rng), 2.0 * pi * unit(rng));
      kw[j] = (unit(rng) - 0.5) * 6.0;
    }
    std::vector<cplx> s(ax.n);
    for (std::size_t i = 0; i < ax.n; ++i) {
      const double x = ax.value(i);
      cplx sum{};
      for (std::size_t j = 0; j < terms; ++j) sum += amp[j] * std::polar(1.0, kw[j] * x);
      const double d = x - centre;
      s[i] = std::exp(-d * d / (2.0 * width * width)) * sum;
    }
    out.push_back(normalized(WaveDistribution(grid, std::move(s))));
  }
  return out;
}

}  // namespace wdst::cli
