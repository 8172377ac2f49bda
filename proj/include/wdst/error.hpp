#pragma once

#include <stdexcept>
#include <string>

namespace wdst {

/// Two distributions (or a distribution and a field) were sampled on different grids,
/// or a transform mask does not fit the grid it is applied to.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical guard refused to run a computation whose result would be meaningless
/// (phase wrapping, insufficient spectral resolution, oversized integration step).
class GuardViolation : public std::runtime_error {
 public:
  GuardViolation(std::string guard, const std::string& what)
      : std::runtime_error(guard + ": " + what), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// Malformed or incomplete scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wdst
