#include "sedwave/speed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sedwave {

double kappa(double mu, const OperatorContext& ctx) {
  const ModelParams& p = ctx.params();
  const double kr = p.k() * p.r;
  double value = p.s * (1.0 - p.p_A) + (1.0 - p.p_J) * kr;
  if (p.s * p.p_A > 0.0) value += p.s * p.p_A * kernel_mgf(ctx.kernel_adult(), mu);
  if (p.p_J * kr > 0.0) value += p.p_J * kr * kernel_mgf(ctx.kernel_juvenile(), mu);
  return value;
}

double kappa_mu_bound(const OperatorContext& ctx) noexcept {
  const ModelParams& p = ctx.params();
  double bound = std::numeric_limits<double>::infinity();
  if (p.s * p.p_A > 0.0) bound = std::min(bound, ctx.kernel_adult().mgf_bound());
  if (p.p_J > 0.0) bound = std::min(bound, ctx.kernel_juvenile().mgf_bound());
  return bound;
}

SpeedResult spreading_speed(const OperatorContext& ctx, const SpeedOptions& opts) {
  if (opts.scan_points < 3) throw std::invalid_argument("spreading_speed: need at least 3 scan points");
  SpeedResult res;
  res.mu_upper = opts.mu_max;
  const double edge = kappa_mu_bound(ctx);
  if (edge <= opts.mu_max) {
    res.mu_upper = edge - opts.domain_margin;
    res.clipped = true;
  }
  if (!(res.mu_upper > opts.mu_min)) throw std::invalid_argument("spreading_speed: empty exponent range");

  auto speed = [&](double mu) { return std::log(kappa(mu, ctx)) / mu; };

  const int n = opts.scan_points;
  const double log_lo = std::log(opts.mu_min);
  const double log_hi = std::log(res.mu_upper);
  res.scan.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double mu = i + 1 == n ? res.mu_upper : std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
    res.scan.emplace_back(mu, speed(mu));
  }
  const auto best = std::min_element(res.scan.begin(), res.scan.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  const std::size_t j = static_cast<std::size_t>(best - res.scan.begin());
  res.mu_star = best->first;
  res.c_star = best->second;
  res.kappa_at_mu = kappa(res.mu_star, ctx);

  if (j == 0 || j + 1 == res.scan.size()) {
    char buf[256];
    const char* where = j == 0 ? "lower end of the exponent scan"
                        : res.clipped ? "kernel MGF domain edge"
                                      : "mu_max";
    std::snprintf(buf, sizeof buf,
                  "spreading_speed: minimum of ln(kappa(mu))/mu sits at the %s (mu = %.6g, c = %.6g); "
                  "the infimum may not be attained on the searched interval",
                  where, res.mu_star, res.c_star);
    throw MinimizerAtBoundary(buf, res);
  }

  // Golden-section search on [mu_{j-1}, mu_{j+1}].
  const double inv_phi = 1.0 / std::numbers::phi;
  double a = res.scan[j - 1].first;
  double b = res.scan[j + 1].first;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = speed(x1);
  double f2 = speed(x2);
  for (int it = 0; it < 300; ++it) {
    if (b - a <= 1e-9 * (1.0 + std::abs(a)) && std::abs(f1 - f2) <= opts.tol) break;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = speed(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = speed(x2);
    }
  }
  const double mu = f1 <= f2 ? x1 : x2;
  const double c = std::min(f1, f2);
  if (c <= res.c_star) {
    res.mu_star = mu;
    res.c_star = c;
    res.kappa_at_mu = kappa(mu, ctx);
  }
  return res;
}

}  // namespace sedwave
