#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace wdst::cli {

/// Flat `key = value` configuration. Keys are dotted identifiers (`grid.n`); `#` starts a
/// comment; blank lines are ignored; a repeated key is an error within one file.
/// Every malformed input throws ConfigError.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& origin = "<text>");
  static Config load(const std::string& path);

  /// Applies one `key=value` override; overrides replace file values.
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& raw(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// One accepted key of a scenario, with its default (empty = required).
struct ParamSpec {
  std::string key;
  std::string fallback;
  std::string description;
};

/// Typed, schema-checked view of a Config. Construction rejects unknown keys and missing
/// required keys.
class Parameters {
 public:
  Parameters(const Config& config, std::span<const ParamSpec> schema);

  double real(const std::string& key) const;
  /// Positive integer.
  std::size_t count(const std::string& key) const;
  long long integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma-separated reals.
  std::vector<double> reals(const std::string& key) const;
  /// `a,b;c,d;...` pairs.
  std::vector<std::pair<double, double>> pairs(const std::string& key) const;

  /// Resolved key/value list in schema order.
  const std::vector<std::pair<std::string, std::string>>& echo() const noexcept { return echo_; }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::pair<std::string, std::string>> echo_;
};

double parse_real(const std::string& key, const std::string& value);

}  // namespace wdst::cli
