#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "sedwave/operators.hpp"

namespace sedwave::testing {

inline ModelParams params(double s, double r, double M, double p_A, double p_J) {
  ModelParams p;
  p.s = s;
  p.r = r;
  p.M = M;
  p.p_A = p_A;
  p.p_J = p_J;
  return p;
}

inline OperatorContext gaussian_context(const ModelParams& p, const Grid& g, double sigma_A = 1.0,
                                        double sigma_J = -1.0) {
  return OperatorContext(p, Fecundity::beverton_holt(p), Kernel::gaussian(sigma_A),
                         Kernel::gaussian(sigma_J > 0 ? sigma_J : sigma_A), g);
}

/// Random non-increasing field with values in [0, M], ext_left = first value,
/// ext_right = last value.
inline DensityField random_monotone(const Grid& g, double M, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, M);
  std::vector<double> v(g.size());
  for (auto& x : v) x = unif(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  const double left = std::max(v.front(), unif(rng));
  const double right = std::min(v.back(), 0.5 * unif(rng));
  return DensityField(g, std::move(v), std::min(left, M), right);
}

inline DensityField random_field(const Grid& g, double M, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, M);
  std::vector<double> v(g.size());
  for (auto& x : v) x = unif(rng);
  return DensityField(g, std::move(v), unif(rng), unif(rng));
}

inline DensityField step(const Grid& g, double M, double at = 0.0) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.x(i) < at ? M : 0.0;
  return DensityField(g, std::move(v), M, 0.0);
}

inline double max_abs(const DensityField& u) {
  double m = std::max(std::abs(u.ext_left()), std::abs(u.ext_right()));
  for (double x : u.values()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace sedwave::testing
