#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wdst/cli/config.hpp"

namespace wdst::cli {

struct BenchRow {
  std::string kernel;
  std::size_t samples = 0;  ///< distribution size the kernel ran on
  std::size_t repeats = 0;
  double median_s = 0.0;
  double iqr_s = 0.0;
  double min_s = 0.0;
  double max_s = 0.0;
};

std::vector<ParamSpec> bench_schema();

/// Times forward_transform, split_step and full_3p1_step after warmup runs. Rows come in
/// that order.
std::vector<BenchRow> bench(const Config& config);

std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace wdst::cli
