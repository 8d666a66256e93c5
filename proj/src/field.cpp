#include "sedwave/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sedwave {

Grid::Grid(double x_min, double dx, std::size_t n) : x_min_(x_min), dx_(dx), n_(n) {
  if (!std::isfinite(x_min) || !std::isfinite(dx) || !(dx > 0.0))
    throw std::invalid_argument("Grid: dx must be positive and finite");
  if (n < 2) throw std::invalid_argument("Grid: need at least two points");
}

Grid Grid::from_range(double x_min, double x_max, std::size_t n) {
  if (n < 2) throw std::invalid_argument("Grid: need at least two points");
  return Grid(x_min, (x_max - x_min) / static_cast<double>(n - 1), n);
}

DensityField::DensityField(Grid grid, std::vector<double> values, double ext_left, double ext_right)
    : grid_(grid), values_(std::move(values)), ext_left_(ext_left), ext_right_(ext_right) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("DensityField: value count does not match grid");
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!ok(ext_left_) || !ok(ext_right_))
    throw std::invalid_argument("DensityField: extensions must be finite and non-negative");
  if (!std::all_of(values_.begin(), values_.end(), ok))
    throw std::invalid_argument("DensityField: values must be finite and non-negative");
}

DensityField DensityField::constant(const Grid& grid, double value) {
  return DensityField(grid, std::vector<double>(grid.size(), value), value, value);
}

double DensityField::min() const noexcept {
  return std::min({*std::min_element(values_.begin(), values_.end()), ext_left_, ext_right_});
}

double DensityField::max() const noexcept {
  return std::max({*std::max_element(values_.begin(), values_.end()), ext_left_, ext_right_});
}

bool DensityField::in_CM(double M) const noexcept { return min() >= 0.0 && max() <= M; }

double sup_distance(const DensityField& a, const DensityField& b, std::size_t margin) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_distance: size mismatch");
  const std::size_t n = a.size();
  double d = 0.0;
  if (margin == 0) {
    d = std::max(std::abs(a.ext_left() - b.ext_left()), std::abs(a.ext_right() - b.ext_right()));
  }
  if (2 * margin >= n) return d;
  for (std::size_t i = margin; i < n - margin; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double monotonicity_violation(const DensityField& u) noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) worst = std::max(worst, u[i + 1] - u[i]);
  return worst;
}

std::optional<double> rightmost_crossing(const DensityField& u, double level) noexcept {
  const Grid& g = u.grid();
  for (std::size_t i = u.size() - 1; i-- > 0;) {
    if (u[i] >= level && u[i + 1] < level) {
      const double t = (u[i] - level) / (u[i] - u[i + 1]);
      return g.x(i) + t * g.dx();
    }
  }
  return std::nullopt;
}

}  // namespace sedwave
