#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wdst/cli/bench.hpp"
#include "wdst/cli/config.hpp"
#include "wdst/cli/scenarios.hpp"
#include "wdst/error.hpp"
#include "wdst/kernels.hpp"

namespace {

constexpr int exit_internal = 1;
constexpr int exit_config = 2;
constexpr int exit_guard = 3;

wdst::cli::Config load(const std::string& path, const std::vector<std::string>& overrides) {
  auto cfg = wdst::cli::Config::load(path);
  for (const auto& o : overrides) cfg.set(o);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-distribution spacetime simulations"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "run one scenario");
  run->add_option("--config", config_path, "scenario config file")->required();
  run->add_option("--set", overrides, "key=value override, repeatable");
  run->add_option("--out", out_dir, "output directory (overrides output.dir)");

  app.add_subcommand("list", "list scenarios");

  auto* bench = app.add_subcommand("bench", "time the core kernels");
  bench->add_option("--config", config_path, "bench config file")->required();
  bench->add_option("--set", overrides, "key=value override, repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  try {
    if (!wdst::kernels::configure_threads_from_env())
      throw wdst::ConfigError("WDST_THREADS must be a positive integer");

    if (app.got_subcommand("list")) {
      for (const auto& s : wdst::cli::list_scenarios()) std::cout << s.name << "  " << s.description << '\n';
      return 0;
    }
    if (app.got_subcommand("bench")) {
      std::cout << wdst::cli::format_bench(wdst::cli::bench(load(config_path, overrides)));
      return 0;
    }
    const auto summary = wdst::cli::run_scenario(load(config_path, overrides), out_dir);
    std::cout << wdst::cli::format_summary(summary);
    return 0;
  } catch (const wdst::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const wdst::GuardViolation& e) {
    std::cerr << "guard violation [" << e.guard() << "]: " << e.what() << '\n';
    return exit_guard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}
