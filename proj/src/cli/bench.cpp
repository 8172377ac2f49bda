#include "wdst/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "wdst/distribution.hpp"
#include "wdst/error.hpp"
#include "wdst/propagator.hpp"
#include "wdst/transform.hpp"

namespace wdst::cli {

namespace {

// Linear-interpolated quantile of sorted samples.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BenchRow time_kernel(const std::string& name, std::size_t samples, std::size_t warmup, std::size_t repeats,
                     const std::function<void()>& body) {
  for (std::size_t i = 0; i < warmup; ++i) body();
  std::vector<double> t(repeats);
  for (auto& v : t) {
    const auto start = std::chrono::steady_clock::now();
    body();
    v = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::sort(t.begin(), t.end());
  BenchRow row;
  row.kernel = name;
  row.samples = samples;
  row.repeats = repeats;
  row.median_s = quantile(t, 0.5);
  row.iqr_s = quantile(t, 0.75) - quantile(t, 0.25);
  row.min_s = t.front();
  row.max_s = t.back();
  return row;
}

}  // namespace

std::vector<ParamSpec> bench_schema() {
  return {{"scenario", "bench", "ignored label"},
          {"output.dir", "wdst_out", "unused by bench"},
          {"bench.n", "1024", "space samples"},
          {"bench.time_n", "32", "time samples of the 3+1 step"},
          {"bench.repeats", "100", "timed repetitions"},
          {"bench.warmup", "5", "untimed repetitions"},
          {"bench.tau", "0.01", "step length"}};
}

std::vector<BenchRow> bench(const Config& config) {
  const auto schema = bench_schema();
  const Parameters p(config, schema);
  const std::size_t n = p.count("bench.n");
  const std::size_t nt = p.count("bench.time_n");
  const std::size_t repeats = p.count("bench.repeats");
  const auto warmup = static_cast<std::size_t>(std::max<long long>(0, p.integer("bench.warmup")));
  const double tau = p.real("bench.tau");
  if (n < 2 || nt < 2) throw ConfigError("bench.n and bench.time_n must be at least 2");
  if (!(tau > 0.0)) throw ConfigError("bench.tau must be positive");

  const Grid line({centered_axis(AxisKind::space, n, 40.0 / static_cast<double>(n))});
  const auto psi = gaussian_packet(line, CoordinateInterval::event(0.0, 0.0), 1.0, 0.0, 1.0);
  const auto v = Potential::harmonic(line, 1.0, 1.0);
  const Grid xt = make_spacetime_grid({line.axis(0), centered_axis(AxisKind::time, nt, 0.25)});
  const auto psi_xt = gaussian_packet(xt, CoordinateInterval::event(0.0, 0.0), 1.0, 0.5, 1.0);
  const auto mask = AxesMask::all(line);

  std::vector<BenchRow> rows;
  WaveDistribution sink = psi;
  rows.push_back(time_kernel("forward_transform", n, warmup, repeats, [&] { sink = forward(psi, mask); }));
  rows.push_back(time_kernel("split_step", n, warmup, repeats, [&] { sink = split_step(psi, v, tau, 1); }));
  rows.push_back(time_kernel("full_3p1_step", n * nt, warmup, repeats, [&] { sink = full_3p1_step(psi_xt, v, tau); }));
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::string out = "kernel              samples  repeats    median_s       iqr_s        min_s        max_s\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-18s %8zu %8zu %12.4e %12.4e %12.4e %12.4e\n", r.kernel.c_str(), r.samples,
                  r.repeats, r.median_s, r.iqr_s, r.min_s, r.max_s);
    out += line;
  }
  return out;
}

}  // namespace wdst::cli
