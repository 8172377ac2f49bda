#include "wdst/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wdst {

bool is_frequency(AxisKind kind) noexcept {
  return kind == AxisKind::wavenumber || kind == AxisKind::angular_frequency;
}

AxisKind conjugate(AxisKind kind) noexcept {
  switch (kind) {
    case AxisKind::space: return AxisKind::wavenumber;
    case AxisKind::time: return AxisKind::angular_frequency;
    case AxisKind::wavenumber: return AxisKind::space;
    case AxisKind::angular_frequency: return AxisKind::time;
  }
  return AxisKind::space;
}

std::string_view to_string(AxisKind kind) noexcept {
  switch (kind) {
    case AxisKind::space: return "space";
    case AxisKind::time: return "time";
    case AxisKind::wavenumber: return "wavenumber";
    case AxisKind::angular_frequency: return "angular_frequency";
  }
  return "unknown";
}

void AxisSpec::validate() const {
  if (n < 2) throw std::invalid_argument("axis needs at least 2 samples, got " + std::to_string(n));
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("axis step must be positive and finite");
  if (!std::isfinite(origin)) throw std::invalid_argument("axis origin must be finite");
  if (static_cast<unsigned>(kind) > 3) throw std::invalid_argument("unknown axis kind");
}

double AxisSpec::value(std::size_t j) const noexcept {
  if (is_frequency(kind)) {
    const auto m = static_cast<std::ptrdiff_t>(j);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    const auto signed_bin = m < static_cast<std::ptrdiff_t>(n) - half ? m : m - static_cast<std::ptrdiff_t>(n);
    return static_cast<double>(signed_bin) * step;
  }
  return origin + static_cast<double>(j) * step;
}

AxisSpec dual_of(const AxisSpec& axis) {
  axis.validate();
  return AxisSpec{conjugate(axis.kind), axis.n,
                  2.0 * std::numbers::pi / (static_cast<double>(axis.n) * axis.step), axis.origin};
}

std::vector<double> frequency_values(const AxisSpec& axis, FrequencyLayout layout) {
  if (!is_frequency(axis.kind)) throw std::invalid_argument("frequency_values needs a dual axis");
  std::vector<double> out(axis.n);
  if (layout == FrequencyLayout::transform_order) {
    for (std::size_t j = 0; j < axis.n; ++j) out[j] = axis.value(j);
  } else {
    const auto half = static_cast<double>(axis.n / 2);
    for (std::size_t j = 0; j < axis.n; ++j) out[j] = (static_cast<double>(j) - half) * axis.step;
  }
  return out;
}

bool same_sampling(const AxisSpec& a, const AxisSpec& b) noexcept {
  if (a.kind != b.kind || a.n != b.n) return false;
  const double tol = 1e-12;
  if (std::abs(a.step - b.step) > tol * std::max(a.step, b.step)) return false;
  return std::abs(a.origin - b.origin) <= tol * std::max({1.0, std::abs(a.origin), a.span()});
}

Grid::Grid(std::vector<AxisSpec> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw std::invalid_argument("grid needs at least one axis");
  strides_.assign(axes_.size(), 1);
  size_ = 1;
  for (std::size_t a = axes_.size(); a-- > 0;) {
    axes_[a].validate();
    strides_[a] = size_;
    size_ *= axes_[a].n;
  }
}

std::size_t Grid::find(AxisKind kind) const noexcept {
  for (std::size_t a = 0; a < axes_.size(); ++a)
    if (axes_[a].kind == kind) return a;
  return axes_.size();
}

std::size_t Grid::count(AxisKind kind) const noexcept {
  std::size_t c = 0;
  for (const auto& ax : axes_) c += ax.kind == kind ? 1 : 0;
  return c;
}

bool Grid::operator==(const Grid& other) const noexcept {
  if (axes_.size() != other.axes_.size()) return false;
  for (std::size_t a = 0; a < axes_.size(); ++a)
    if (!same_sampling(axes_[a], other.axes_[a])) return false;
  return true;
}

bool Grid::is_spacetime() const noexcept {
  for (const auto& ax : axes_)
    if (is_frequency(ax.kind)) return false;
  return !axes_.empty();
}

bool Grid::is_dual() const noexcept {
  for (const auto& ax : axes_)
    if (!is_frequency(ax.kind)) return false;
  return !axes_.empty();
}

Grid make_spacetime_grid(std::vector<AxisSpec> axes) {
  Grid g(std::move(axes));
  if (!g.is_spacetime()) throw std::invalid_argument("spacetime grid may only hold space and time axes");
  const auto spaces = g.count(AxisKind::space);
  if (spaces < 1 || spaces > 3) throw std::invalid_argument("spacetime grid needs 1-3 space axes");
  if (g.count(AxisKind::time) > 1) throw std::invalid_argument("spacetime grid allows at most one time axis");
  return g;
}

AxisSpec centered_axis(AxisKind kind, std::size_t n, double step) {
  AxisSpec ax{kind, n, step, -static_cast<double>(n / 2) * step};
  ax.validate();
  return ax;
}

Grid dual_of(const Grid& grid) { return dual_of(grid, std::vector<bool>(grid.rank(), true)); }

Grid dual_of(const Grid& grid, const std::vector<bool>& mask) {
  if (mask.size() != grid.rank()) throw std::invalid_argument("mask length differs from grid rank");
  std::vector<AxisSpec> axes(grid.axes().begin(), grid.axes().end());
  for (std::size_t a = 0; a < axes.size(); ++a)
    if (mask[a]) axes[a] = dual_of(axes[a]);
  return Grid(std::move(axes));
}

}  // namespace wdst
