#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdst/cli/config.hpp"
#include "wdst/grid.hpp"
#include "wdst/wave_distribution.hpp"

namespace wdst::cli {

struct ScenarioInfo {
  std::string name;
  std::string description;
};

/// The seven runnable scenarios, in a fixed order.
const std::vector<ScenarioInfo>& list_scenarios();

/// Accepted keys of one scenario, including `scenario` and `output.dir`.
/// Throws ConfigError for an unknown name.
std::vector<ParamSpec> scenario_schema(const std::string& name);

struct RunSummary {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> parameters;
  /// Headline numbers, formatted with 17 significant digits; list metrics are comma-joined.
  std::vector<std::pair<std::string, std::string>> metrics;
  double wall_time_s = 0.0;
  /// File names relative to the output directory, sorted; summary.txt included.
  std::vector<std::string> files;
  std::string output_dir;

  const std::string& metric(const std::string& name) const;
};

/// Runs the scenario named by the `scenario` key and writes its arrays plus summary.txt.
/// A non-empty `out_dir` replaces `output.dir`. Throws ConfigError, GuardViolation, or
/// other exceptions for internal failures.
RunSummary run_scenario(const Config& config, const std::string& out_dir = {});

/// `key = value` lines: scenario, wall_time_s, param.*, metric.*, files.
std::string format_summary(const RunSummary& summary);

/// Free Gaussian exp(-(x-x0)^2/2 sigma^2 + i k0 x) evolved for time t with omega = k^2/2m,
/// unit discrete norm.
WaveDistribution analytic_free_gaussian(const Grid& grid, double x0, double k0, double sigma, double mass, double t);

/// Distance from the intensity maximum to the first local minimum below 5% of it, refined
/// by a parabola through the three samples around that minimum.
double central_lobe_halfwidth(const std::vector<double>& x, const std::vector<double>& intensity);

/// Seeded localized, band-limited test states: a Gaussian envelope (random width and
/// centre) times a random superposition of up to four low wavenumbers.
std::vector<WaveDistribution> random_localized_states(const Grid& grid, std::size_t count, unsigned long long seed);

}  // namespace wdst::cli
