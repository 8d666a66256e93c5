#include "sedwave/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sedwave/errors.hpp"
#include "sedwave/speed.hpp"

namespace sedwave {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double max_increase(const DensityField& from, const DensityField& to) {
  double worst = std::max(to.ext_left() - from.ext_left(), to.ext_right() - from.ext_right());
  for (std::size_t i = 0; i < from.size(); ++i) worst = std::max(worst, to[i] - from[i]);
  return worst;
}

struct LeadingEdge {
  double mu_slow = 0.0;                // decay rate used for the tail
  std::optional<double> mu_fast;       // second root, when it exists in range
  bool has_root = false;               // growth factor crosses 1
};

// Decaying modes exp(-mu x) of the linearised grid operator Q_c: the roots of
// linearized_growth_factor(mu) = 1, or its minimiser when there is no root.
LeadingEdge leading_edge(double c, const OperatorContext& ctx) {
  auto rho = [&](double mu) { return linearized_growth_factor(mu, c, ctx); };
  const double mu_lo = 1e-4;
  const double mu_hi = std::min(kappa_mu_bound(ctx) * (1.0 - 1e-6), 50.0);
  const int n = 400;
  double best_mu = mu_lo;
  double best = rho(mu_lo);
  for (int i = 1; i < n; ++i) {
    const double mu = std::exp(std::log(mu_lo) + (std::log(mu_hi) - std::log(mu_lo)) * i / (n - 1));
    const double v = rho(mu);
    if (v < best) {
      best = v;
      best_mu = mu;
    }
  }
  auto bisect = [&](double lo, double hi) {
    // rho(lo) and rho(hi) straddle 1.
    const bool lo_above = rho(lo) > 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((rho(mid) > 1.0) == lo_above ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  LeadingEdge edge;
  if (best >= 1.0 || rho(mu_lo) <= 1.0) {
    // Ternary refinement of the minimiser around the coarse scan point.
    double a = best_mu * 0.95;
    double b = std::min(best_mu * 1.05, mu_hi);
    for (int it = 0; it < 100; ++it) {
      const double m1 = a + (b - a) / 3.0;
      const double m2 = b - (b - a) / 3.0;
      if (rho(m1) <= rho(m2))
        b = m2;
      else
        a = m1;
    }
    edge.mu_slow = 0.5 * (a + b);
    return edge;
  }
  edge.has_root = true;
  edge.mu_slow = bisect(mu_lo, best_mu);
  if (rho(mu_hi) > 1.0) edge.mu_fast = bisect(best_mu, mu_hi);
  return edge;
}

double pin_position(const Grid& g) {
  return (g.x_min() < 0.0 && g.x_max() > 0.0) ? 0.0 : 0.5 * (g.x_min() + g.x_max());
}

DensityField impose_tail(const DensityField& u, double level, double mu) {
  std::size_t last = u.size();
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] >= level) {
      last = i;
      break;
    }
  }
  if (last == u.size() || last + 1 == u.size()) return u;
  std::vector<double> v(u.values().begin(), u.values().end());
  const Grid& g = u.grid();
  for (std::size_t i = last + 1; i < v.size(); ++i) v[i] = v[last] * std::exp(-mu * (g.x(i) - g.x(last)));
  return DensityField(g, std::move(v), u.ext_left(), u.ext_right());
}

std::size_t margin_points(const Grid& g, double fraction) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(g.size())));
}

}  // namespace

DensityField initial_phi(const Grid& grid, double half_height, double ramp_width) {
  if (!(half_height > 0.0)) throw std::invalid_argument("initial_phi: half_height must be positive");
  if (!(ramp_width > 0.0)) throw std::invalid_argument("initial_phi: ramp_width must be positive");
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid.x(i);
    v[i] = x >= 0.0 ? 0.0 : (x <= -ramp_width ? half_height : half_height * (-x / ramp_width));
  }
  return DensityField(grid, std::move(v), half_height, 0.0);
}

DensityField initial_phi(const OperatorContext& ctx, double half_height, double ramp_width) {
  if (!(half_height < ctx.params().M)) throw std::invalid_argument("initial_phi: half_height must lie in (0, M)");
  return initial_phi(ctx.grid(), half_height, ramp_width);
}

DensityField initial_phi(const OperatorContext& ctx) {
  return initial_phi(ctx, 0.5 * ctx.params().M, 10.0 * ctx.grid().dx());
}

namespace {

WeinbergerResult weinberger_iterate(double c, const OperatorContext& ctx, const DensityField& phi, double tol,
                                    int max_iter) {
  WeinbergerResult res{phi, 0, 0.0, 0.0, false};
  for (int it = 1; it <= max_iter; ++it) {
    DensityField next = apply_Rc(res.a, c, phi, ctx);
    res.max_decrease = std::max(res.max_decrease, max_increase(next, res.a));
    res.last_increment = sup_distance(next, res.a);
    res.a = std::move(next);
    res.iterations = it;
    if (res.last_increment <= tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace

WeinbergerResult weinberger_limit(double c, const OperatorContext& ctx, const DensityField& phi, double tol,
                                  int max_iter) {
  WeinbergerResult res = weinberger_iterate(c, ctx, phi, tol, max_iter);
  if (!res.converged) throw NoConvergence("weinberger_limit", res.iterations, res.last_increment);
  return res;
}

WaveProfile construct_wave(double c, const OperatorContext& ctx, const WaveOptions& opts) {
  if (!(ctx.p_contr() < 1.0)) throw ContractionViolated(ctx.p_contr());
  const double M = ctx.params().M;
  const Grid& g = ctx.grid();
  const std::size_t n = g.size();
  const std::size_t margin = margin_points(g, opts.edge_margin);
  if (2 * margin + 2 > n) throw std::invalid_argument("construct_wave: edge margin leaves no interior");

  const DensityField phi0 = initial_phi(ctx, opts.half_height.value_or(0.5 * M),
                                        opts.ramp_width.value_or(10.0 * g.dx()));
  WeinbergerResult seed = weinberger_iterate(c, ctx, phi0, opts.tol_a * M, opts.max_iter_a);

  WaveProfile out{c, seed.a};
  out.iterations_a = seed.iterations;
  out.seed_converged = seed.converged;

  {
    const DensityField& a = seed.a;
    double interior_min = M;
    for (std::size_t i = margin; i < n - margin; ++i) interior_min = std::min(interior_min, a[i]);
    if (interior_min >= (1.0 - opts.edge_tol) * M || a[n - 1 - margin] >= 0.5 * M)
      throw DegenerateWave(DegenerateWave::Kind::Saturated,
                           "a(c; .) fills the domain at c = " + num(c) + "; no wave below the spreading speed");
    if (a.max() <= opts.edge_tol * M)
      throw DegenerateWave(DegenerateWave::Kind::Collapsed, "a(c; .) vanishes at c = " + num(c));
  }

  const LeadingEdge edge = leading_edge(c, ctx);
  out.tail_rate = edge.mu_slow;
  // The fast mode contaminates a pure exponential tail by level^((mu_fast - mu_slow) / mu_slow).
  out.tail_imposed =
      edge.has_root && (!edge.mu_fast || std::pow(opts.tail_level, (*edge.mu_fast - edge.mu_slow) / edge.mu_slow) <= 1e-2);

  const double half = 0.5 * M;
  const double x_pin = pin_position(g);
  auto pin = [&](const DensityField& psi, double& shift) {
    const auto x_h = rightmost_crossing(psi, half);
    if (!x_h) {
      if (psi[0] < half)
        throw DegenerateWave(DegenerateWave::Kind::Collapsed, "profile fell below M/2 at c = " + num(c));
      throw DegenerateWave(DegenerateWave::Kind::Saturated, "profile exceeds M/2 everywhere at c = " + num(c));
    }
    shift = *x_h - x_pin;
    DensityField pinned = shift_sample(psi, shift);
    return out.tail_imposed ? impose_tail(pinned, opts.tail_level * M, edge.mu_slow) : pinned;
  };

  // Seed: a(c; .) with its leading edge raised to the exponential tail.
  DensityField phi = [&] {
    const DensityField& a = seed.a;
    const double x_h = rightmost_crossing(a, half).value_or(g.x_min());
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = g.x(i);
      const double graft = x >= x_h ? half * std::exp(-edge.mu_slow * (x - x_h)) : 0.0;
      v[i] = std::max(a[i], graft);
    }
    double unused = 0.0;
    return pin(DensityField(g, std::move(v), a.ext_left(), a.ext_right()), unused);
  }();

  const double tol = opts.tol * M;
  double increment = 0.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    DensityField psi = apply_Qc(phi, c, ctx);
    out.max_phi_increase = std::max(out.max_phi_increase, max_increase(phi, psi));
    DensityField next = pin(psi, out.pin_shift);
    increment = sup_distance(next, phi);
    phi = std::move(next);
    out.iterations_phi = it;
    if (increment <= tol) break;
  }
  out.final_increment = increment;
  if (increment > tol) throw NoConvergence("construct_wave", opts.max_iter, increment);

  double interior_min = M;
  double interior_max = 0.0;
  for (std::size_t i = margin; i < n - margin; ++i) {
    interior_min = std::min(interior_min, phi[i]);
    interior_max = std::max(interior_max, phi[i]);
  }
  if (interior_min >= (1.0 - opts.edge_tol) * M)
    throw DegenerateWave(DegenerateWave::Kind::Saturated, "wave profile saturated at c = " + num(c));
  if (interior_max <= opts.edge_tol * M)
    throw DegenerateWave(DegenerateWave::Kind::Collapsed, "wave profile collapsed at c = " + num(c));

  out.residual = sup_distance(phi, apply_Qc(phi, c, ctx), margin);
  out.W = std::move(phi);
  return out;
}

double translation_drift(const DensityField& W, double c, const OperatorContext& ctx, int n_gen, std::size_t margin) {
  const Grid& g = W.grid();
  const double lo = g.x(margin);
  const double hi = g.x(g.size() - 1 - margin);
  double drift = 0.0;
  DensityField N = W;
  for (int gen = 1; gen <= n_gen; ++gen) {
    N = apply_Q(N, ctx);
    const double d = gen * c;
    const DensityField target = shift_sample(W, -d);
    for (std::size_t i = margin; i + margin < g.size(); ++i) {
      const double src = g.x(i) - d;
      if (src < lo || src > hi) continue;
      drift = std::max(drift, std::abs(N[i] - target[i]));
    }
  }
  return drift;
}

VerificationReport verify_wave(const WaveProfile& wave, const OperatorContext& ctx, const VerifyOptions& opts) {
  const double M = ctx.params().M;
  const DensityField& W = wave.W;
  const std::size_t n = W.size();
  const std::size_t margin = margin_points(W.grid(), opts.edge_margin);
  VerificationReport rep;

  {
    const DensityField b = apply_Bc(W, wave.c, ctx);
    const DensityField cc = apply_Cc(W, wave.c, ctx);
    for (std::size_t i = margin; i + margin < n; ++i)
      rep.residual = std::max(rep.residual, std::abs(W[i] - b[i] - cc[i]));
  }
  rep.monotonicity_violation = monotonicity_violation(W);
  rep.boundary_left_error = std::abs(W[0] - M);
  rep.boundary_right_error = std::abs(W[n - 1]);

  rep.simulation_drift = translation_drift(W, wave.c, ctx, opts.n_gen, margin);

  rep.residual_ok = rep.residual <= opts.residual_tol * M;
  rep.monotone_ok = rep.monotonicity_violation <= opts.monotone_tol;
  rep.boundary_ok = rep.boundary_left_error <= opts.boundary_tol * M && rep.boundary_right_error <= opts.boundary_tol * M;
  rep.simulation_ok = rep.simulation_drift <= opts.drift_tol * M;
  return rep;
}

}  // namespace sedwave
