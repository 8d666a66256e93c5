#pragma once

#include <utility>
#include <vector>

#include "sedwave/operators.hpp"

namespace sedwave {

/// [u0, Q[u0], ..., Q^n_gen[u0]].
std::vector<DensityField> simulate(const DensityField& u0, const OperatorContext& ctx, int n_gen);

struct FitWindow {
  int first = 0;
  int last = 0;  // inclusive
};

struct FrontTrace {
  double level = 0.0;
  std::vector<std::pair<int, double>> positions;  // (generation, x_n)
  double fitted_speed = 0.0;
  FitWindow fit_window;
};

/// Rightmost down-crossing of `level` in every snapshot, and the least-squares
/// slope of x_n against n over the window. Throws LevelNotCrossed for the
/// first snapshot without a crossing.
FrontTrace track_front(const std::vector<DensityField>& traj, double level, FitWindow fit_window);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<std::pair<int, double>>& points);

}  // namespace sedwave
