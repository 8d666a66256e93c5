#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sedwave {

/// Uniform 1-D grid x_i = x_min + i dx, i = 0..n-1, on a truncated habitat.
class Grid {
 public:
  Grid(double x_min, double dx, std::size_t n);
  static Grid from_range(double x_min, double x_max, std::size_t n);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_min_ + static_cast<double>(n_ - 1) * dx_; }
  double dx() const noexcept { return dx_; }
  std::size_t size() const noexcept { return n_; }
  double x(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i) * dx_; }

  bool operator==(const Grid&) const = default;

 private:
  double x_min_;
  double dx_;
  std::size_t n_;
};

/// Non-negative density sampled on a Grid, extended by constants beyond the
/// truncated domain.
class DensityField {
 public:
  DensityField(Grid grid, std::vector<double> values, double ext_left, double ext_right);

  static DensityField constant(const Grid& grid, double value);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double ext_left() const noexcept { return ext_left_; }
  double ext_right() const noexcept { return ext_right_; }

  double min() const noexcept;
  double max() const noexcept;

  /// 0 <= u <= M on the grid and for both extensions.
  bool in_CM(double M) const noexcept;

 private:
  Grid grid_;
  std::vector<double> values_;
  double ext_left_;
  double ext_right_;
};

/// Sup-norm distance over grid points [margin, n - margin), plus the
/// extensions when margin == 0.
double sup_distance(const DensityField& a, const DensityField& b, std::size_t margin = 0);

/// Largest increase u[i+1] - u[i] (0 when the samples are non-increasing).
double monotonicity_violation(const DensityField& u) noexcept;

/// Position of the rightmost down-crossing of `level`, by linear interpolation
/// between grid samples; nullopt when the samples never cross it.
std::optional<double> rightmost_crossing(const DensityField& u, double level) noexcept;

}  // namespace sedwave
