#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wdst {

// Numeric values are the on-disk codes of the array format.
enum class AxisKind : std::uint8_t {
  space = 0,
  time = 1,
  wavenumber = 2,
  angular_frequency = 3,
};

bool is_frequency(AxisKind kind) noexcept;
AxisKind conjugate(AxisKind kind) noexcept;
std::string_view to_string(AxisKind kind) noexcept;

enum class FrequencyLayout { transform_order, centered };

/// One uniformly sampled, periodic axis.
///
/// Space and time axes sample `origin + j * step`. Frequency axes sample the
/// transform bins `m * step` (m in [-n/2, n/2)); their `origin` records the origin
/// of the conjugate space/time axis, which fixes the phase reference of the
/// transform and makes `dual_of` exactly involutive.
struct AxisSpec {
  AxisKind kind = AxisKind::space;
  std::size_t n = 2;
  double step = 1.0;
  double origin = 0.0;

  /// Throws std::invalid_argument unless n >= 2, step > 0 and both are finite.
  void validate() const;

  /// Coordinate of sample j (space/time) or frequency of bin j in transform order.
  double value(std::size_t j) const noexcept;

  /// n * step: the periodic extent of the axis.
  double span() const noexcept { return static_cast<double>(n) * step; }

  bool operator==(const AxisSpec&) const = default;
};

/// Same kind and length; step and origin equal to 1e-12 relative. A space axis mapped
/// through dual_of twice can differ from the original by an ulp in its step.
bool same_sampling(const AxisSpec& a, const AxisSpec& b) noexcept;

AxisSpec dual_of(const AxisSpec& axis);

/// Frequencies of a dual axis. Transform order matches the bin order of the transform
/// engine (0, 1, ..., -n/2, ..., -1); centered order is monotone increasing.
std::vector<double> frequency_values(const AxisSpec& axis, FrequencyLayout layout);

/// Row-major product of axes. The last axis varies fastest.
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<AxisSpec> axes);

  std::span<const AxisSpec> axes() const noexcept { return axes_; }
  const AxisSpec& axis(std::size_t a) const { return axes_.at(a); }
  std::size_t rank() const noexcept { return axes_.size(); }
  std::size_t size() const noexcept { return size_; }

  /// Distance in the flat sample array between neighbours along axis a.
  std::size_t stride(std::size_t a) const { return strides_.at(a); }

  /// Index of the first axis of the given kind, or rank() if none.
  std::size_t find(AxisKind kind) const noexcept;
  bool has(AxisKind kind) const noexcept { return find(kind) != rank(); }
  std::size_t count(AxisKind kind) const noexcept;

  /// Index of the sample along axis a for flat index i.
  std::size_t coordinate_index(std::size_t flat, std::size_t a) const noexcept {
    return (flat / strides_[a]) % axes_[a].n;
  }

  bool is_spacetime() const noexcept;
  bool is_dual() const noexcept;

  /// Axis-by-axis same_sampling.
  bool operator==(const Grid& other) const noexcept;

 private:
  std::vector<AxisSpec> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Builds a parameter grid with 1-3 space axes and at most one time axis.
Grid make_spacetime_grid(std::vector<AxisSpec> axes);

/// Convenience for the common centred axis: n samples of spacing step starting at
/// -n/2 * step, so that x = 0 is an exact sample.
AxisSpec centered_axis(AxisKind kind, std::size_t n, double step);

Grid dual_of(const Grid& grid);

/// Dual of the selected axes only; other axes are copied.
Grid dual_of(const Grid& grid, const std::vector<bool>& mask);

}  // namespace wdst
