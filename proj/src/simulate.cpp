#include "sedwave/simulate.hpp"

#include <stdexcept>

#include "sedwave/errors.hpp"

namespace sedwave {

std::vector<DensityField> simulate(const DensityField& u0, const OperatorContext& ctx, int n_gen) {
  if (n_gen < 0) throw std::invalid_argument("simulate: n_gen must be non-negative");
  std::vector<DensityField> traj;
  traj.reserve(static_cast<std::size_t>(n_gen) + 1);
  traj.push_back(u0);
  for (int n = 0; n < n_gen; ++n) traj.push_back(apply_Q(traj.back(), ctx));
  return traj;
}

double fit_slope(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_slope: need at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [n, x] : points) {
    mx += n;
    my += x;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [n, x] : points) {
    sxy += (n - mx) * (x - my);
    sxx += (n - mx) * (n - mx);
  }
  return sxy / sxx;
}

FrontTrace track_front(const std::vector<DensityField>& traj, double level, FitWindow fit_window) {
  if (fit_window.first < 0 || fit_window.last <= fit_window.first ||
      fit_window.last >= static_cast<int>(traj.size()))
    throw std::invalid_argument("track_front: fit window must satisfy 0 <= first < last < trajectory length");
  FrontTrace trace;
  trace.level = level;
  trace.fit_window = fit_window;
  trace.positions.reserve(traj.size());
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const auto x = rightmost_crossing(traj[n], level);
    if (!x) throw LevelNotCrossed(static_cast<int>(n), level);
    trace.positions.emplace_back(static_cast<int>(n), *x);
  }
  trace.fitted_speed = fit_slope({trace.positions.begin() + fit_window.first,
                                  trace.positions.begin() + fit_window.last + 1});
  return trace;
}

}  // namespace sedwave
