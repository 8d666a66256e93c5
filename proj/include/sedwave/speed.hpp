#pragma once

#include <utility>
#include <vector>

#include "sedwave/errors.hpp"
#include "sedwave/operators.hpp"

namespace sedwave {

/// kappa(mu) = s p_A M_A(mu) + p_J k r M_J(mu) + s(1-p_A) + (1-p_J) k r, with
/// M_A, M_J the kernel moment generating functions. A kernel whose dispersal
/// coefficient is zero is not evaluated.
double kappa(double mu, const OperatorContext& ctx);

/// Upper end of the admissible exponent range: the smallest MGF bound among
/// the kernels that actually carry dispersers (+inf when unbounded).
double kappa_mu_bound(const OperatorContext& ctx) noexcept;

struct SpeedResult {
  double c_star = 0.0;
  double mu_star = 0.0;
  double kappa_at_mu = 0.0;
  std::vector<std::pair<double, double>> scan;  // (mu, c(mu))
  double mu_upper = 0.0;                        // right end of the searched range
  bool clipped = false;                         // mu_upper lowered to the MGF domain
};

class MinimizerAtBoundary : public Error {
 public:
  MinimizerAtBoundary(const std::string& what, SpeedResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const SpeedResult& partial() const noexcept { return partial_; }

 private:
  SpeedResult partial_;
};

struct SpeedOptions {
  double mu_max = 10.0;
  double tol = 1e-10;        // on |delta c| between golden-section brackets
  int scan_points = 64;
  double mu_min = 1e-3;
  double domain_margin = 1e-6;  // distance kept from an MGF domain edge
};

/// Minimises c(mu) = ln(kappa(mu)) / mu over (0, mu_max] by a log-spaced scan
/// followed by golden-section refinement on the bracketing triple.
SpeedResult spreading_speed(const OperatorContext& ctx, const SpeedOptions& opts = {});

inline SpeedResult spreading_speed(const OperatorContext& ctx, double mu_max, double tol) {
  SpeedOptions opts;
  opts.mu_max = mu_max;
  opts.tol = tol;
  return spreading_speed(ctx, opts);
}

}  // namespace sedwave
