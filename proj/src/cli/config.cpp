#include "wdst/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wdst/error.hpp"

namespace wdst::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& key) {
  if (key.empty() || key.front() == '.' || key.back() == '.') return false;
  char prev = 0;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
    if (!ok || (c == '.' && prev == '.')) return false;
    prev = c;
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

double parse_real(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  if (!value.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError("'" + key + "' expects a finite number, got '" + value + "'");
  return v;
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (!cfg.values_.emplace(key, value).second) throw ConfigError(where + ": duplicate key '" + key + "'");
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void Config::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' is not key=value");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string& key, const std::string& value) {
  if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'");
  if (value.empty()) throw ConfigError("empty value for '" + key + "'");
  values_[key] = value;
}

const std::string& Config::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

Parameters::Parameters(const Config& config, std::span<const ParamSpec> schema) {
  std::set<std::string> known;
  for (const auto& p : schema) known.insert(p.key);
  for (const auto& [key, value] : config.entries())
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "'");
  for (const auto& p : schema) {
    std::string v;
    if (config.contains(p.key))
      v = config.raw(p.key);
    else if (!p.fallback.empty())
      v = p.fallback;
    else
      throw ConfigError("missing required key '" + p.key + "'");
    values_[p.key] = v;
    echo_.emplace_back(p.key, v);
  }
}

const std::string& Parameters::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("key '" + key + "' is not part of this scenario");
  return it->second;
}

double Parameters::real(const std::string& key) const { return parse_real(key, text(key)); }

long long Parameters::integer(const std::string& key) const {
  const auto& s = text(key);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError("'" + key + "' expects an integer, got '" + s + "'");
  return v;
}

std::size_t Parameters::count(const std::string& key) const {
  const long long v = integer(key);
  if (v < 1) throw ConfigError("'" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

bool Parameters::flag(const std::string& key) const {
  const auto& s = text(key);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + s + "'");
}

std::vector<double> Parameters::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split(text(key), ',')) out.push_back(parse_real(key, item));
  return out;
}

std::vector<std::pair<double, double>> Parameters::pairs(const std::string& key) const {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : split(text(key), ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw ConfigError("'" + key + "' expects 'a,b;c,d;...', got '" + text(key) + "'");
    out.emplace_back(parse_real(key, xy[0]), parse_real(key, xy[1]));
  }
  return out;
}

}  // namespace wdst::cli
