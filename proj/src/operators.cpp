#include "sedwave/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sedwave/errors.hpp"

namespace sedwave {

namespace {

void require_grid(const DensityField& u, const OperatorContext& ctx) {
  if (!(u.grid() == ctx.grid())) throw std::invalid_argument("field grid differs from the operator grid");
}

struct Parts {
  std::vector<double> local;
  double local_left;
  double local_right;
  DensityField dispersal;
};

// Sedentary and dispersing contributions of Q evaluated on v.
Parts split_Q(const DensityField& v, const OperatorContext& ctx) {
  const ModelParams& p = ctx.params();
  const Fecundity& F = ctx.fecundity();
  const double a_sed = p.s * (1.0 - p.p_A);
  const double b_sed = 1.0 - p.p_J;
  const double a_dis = p.s * p.p_A;
  const double b_dis = p.p_J;
  const std::size_t n = v.size();

  std::vector<double> fv(n);
  std::vector<double> local(n);
  for (std::size_t i = 0; i < n; ++i) {
    fv[i] = F(v[i]);
    local[i] = a_sed * v[i] + b_sed * fv[i];
  }
  const double fl = F(v.ext_left());
  const double fr = F(v.ext_right());

  std::vector<double> dis(n);
  double dis_left = a_dis * v.ext_left() + b_dis * fl;
  double dis_right = a_dis * v.ext_right() + b_dis * fr;
  if (ctx.shared_kernel()) {
    std::vector<double> mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = a_dis * v[i] + b_dis * fv[i];
    DensityField conv = convolve(DensityField(v.grid(), std::move(mix), dis_left, dis_right), ctx.stencil_adult());
    std::copy(conv.values().begin(), conv.values().end(), dis.begin());
  } else {
    DensityField ca = convolve(v, ctx.stencil_adult());
    DensityField cj = convolve(DensityField(v.grid(), std::move(fv), fl, fr), ctx.stencil_juvenile());
    for (std::size_t i = 0; i < n; ++i) dis[i] = a_dis * ca[i] + b_dis * cj[i];
  }
  return {std::move(local), a_sed * v.ext_left() + b_sed * fl, a_sed * v.ext_right() + b_sed * fr,
          DensityField(v.grid(), std::move(dis), dis_left, dis_right)};
}

DensityField sum(const std::vector<double>& local, double ll, double lr, const DensityField& dis) {
  std::vector<double> out(local.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = local[i] + dis[i];
  return DensityField(dis.grid(), std::move(out), ll + dis.ext_left(), lr + dis.ext_right());
}

}  // namespace

OperatorContext::OperatorContext(ModelParams params, Fecundity fecundity, Kernel kernel_adult,
                                 Kernel kernel_juvenile, Grid grid)
    : params_(params),
      fecundity_(std::move(fecundity)),
      kernel_adult_(std::move(kernel_adult)),
      kernel_juvenile_(std::move(kernel_juvenile)),
      grid_(grid),
      stencil_adult_(kernel_adult_, grid.dx()),
      stencil_juvenile_(kernel_juvenile_, grid.dx()),
      p_contr_(growth_lipschitz_bound(params_, fecundity_)) {
  if (auto w = stencil_adult_.accuracy_warning(grid_)) warnings_.push_back("adult kernel: " + *w);
  if (auto w = stencil_juvenile_.accuracy_warning(grid_)) warnings_.push_back("juvenile kernel: " + *w);
}

double OperatorContext::sedentary_growth(double x) const {
  return params_.s * (1.0 - params_.p_A) * x + (1.0 - params_.p_J) * fecundity_(x);
}

DensityField apply_Q(const DensityField& u, const OperatorContext& ctx) {
  require_grid(u, ctx);
  Parts parts = split_Q(u, ctx);
  return sum(parts.local, parts.local_left, parts.local_right, parts.dispersal);
}

DensityField apply_Bc(const DensityField& u, double c, const OperatorContext& ctx) {
  require_grid(u, ctx);
  DensityField v = shift_sample(u, c);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ctx.sedentary_growth(v[i]);
  return DensityField(v.grid(), std::move(out), ctx.sedentary_growth(v.ext_left()),
                      ctx.sedentary_growth(v.ext_right()));
}

DensityField apply_Cc(const DensityField& u, double c, const OperatorContext& ctx) {
  require_grid(u, ctx);
  return split_Q(shift_sample(u, c), ctx).dispersal;
}

DensityField apply_Qc(const DensityField& u, double c, const OperatorContext& ctx) {
  return apply_Q(shift_sample(u, c), ctx);
}

DensityField apply_Rc(const DensityField& u, double c, const DensityField& phi, const OperatorContext& ctx) {
  require_grid(phi, ctx);
  DensityField q = apply_Qc(u, c, ctx);
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(phi[i], q[i]);
  return DensityField(q.grid(), std::move(out), std::max(phi.ext_left(), q.ext_left()),
                      std::max(phi.ext_right(), q.ext_right()));
}

GcSolution solve_Gc(const DensityField& w, double c, const OperatorContext& ctx, double tol, int max_iter) {
  require_grid(w, ctx);
  if (!(ctx.p_contr() < 1.0)) throw ContractionViolated(ctx.p_contr());

  auto picard = [&](const DensityField& u) {
    DensityField b = apply_Bc(u, c, ctx);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[i] + w[i];
    return DensityField(u.grid(), std::move(out), b.ext_left() + w.ext_left(), b.ext_right() + w.ext_right());
  };

  DensityField u = w;
  double increment = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    DensityField next = picard(u);
    increment = sup_distance(next, u);
    u = std::move(next);
    if (increment <= tol) {
      const double residual = sup_distance(u, picard(u));
      return {std::move(u), it, residual};
    }
  }
  throw NoConvergence("solve_Gc", max_iter, increment);
}

double linearized_growth_factor(double mu, double c, const OperatorContext& ctx) {
  const ModelParams& p = ctx.params();
  const double slope = ctx.fecundity().slope_at_zero();
  const double sym = p.s * (1.0 - p.p_A) + (1.0 - p.p_J) * slope +
                     p.s * p.p_A * ctx.stencil_adult().mgf(mu) + p.p_J * slope * ctx.stencil_juvenile().mgf(mu);
  // shift_sample on exp(-mu x): (1 - theta) exp(-mu k dx) + theta exp(-mu (k+1) dx), c = (k + theta) dx.
  const double dx = ctx.grid().dx();
  const double steps = c / dx;
  const double nearest = std::round(steps);
  double factor;
  if (std::abs(steps - nearest) <= 1e-9) {
    factor = std::exp(-mu * nearest * dx);
  } else {
    const double k = std::floor(steps);
    const double theta = steps - k;
    factor = (1.0 - theta) * std::exp(-mu * k * dx) + theta * std::exp(-mu * (k + 1.0) * dx);
  }
  return sym * factor;
}

}  // namespace sedwave
