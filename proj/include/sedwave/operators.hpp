#pragma once

// The growth-dispersal operator Q and its traveling-frame pieces on a grid.
//
//   Q[u]    = s(1-p_A) u + (1-p_J) F(u) + s p_A K_A * u + p_J K_J * F(u)
//   B_c[u]  = s(1-p_A) u(.+c) + (1-p_J) F(u(.+c))         (sedentary part)
//   C_c[u]  = s p_A K_A * u(.+c) + p_J K_J * F(u(.+c))     (dispersing part)
//   Q_c     = B_c + C_c = Q o shift_c
//
// Constant extensions travel through every operator, so each output carries
// the operator applied to the input's boundary constants.

#include <string>
#include <vector>

#include "sedwave/field.hpp"
#include "sedwave/kernel.hpp"
#include "sedwave/model.hpp"

namespace sedwave {

class OperatorContext {
 public:
  OperatorContext(ModelParams params, Fecundity fecundity, Kernel kernel_adult, Kernel kernel_juvenile,
                  Grid grid);

  const ModelParams& params() const noexcept { return params_; }
  const Fecundity& fecundity() const noexcept { return fecundity_; }
  const Kernel& kernel_adult() const noexcept { return kernel_adult_; }
  const Kernel& kernel_juvenile() const noexcept { return kernel_juvenile_; }
  const Grid& grid() const noexcept { return grid_; }
  const ConvolutionStencil& stencil_adult() const noexcept { return stencil_adult_; }
  const ConvolutionStencil& stencil_juvenile() const noexcept { return stencil_juvenile_; }
  bool shared_kernel() const noexcept { return kernel_adult_ == kernel_juvenile_; }

  /// Contraction constant of B_c: sup over [0, M] of the sedentary growth slope.
  double p_contr() const noexcept { return p_contr_; }

  /// Resolution / truncation diagnostics collected at construction.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// g(x) = s(1-p_A) x + (1-p_J) F(x).
  double sedentary_growth(double x) const;

 private:
  ModelParams params_;
  Fecundity fecundity_;
  Kernel kernel_adult_;
  Kernel kernel_juvenile_;
  Grid grid_;
  ConvolutionStencil stencil_adult_;
  ConvolutionStencil stencil_juvenile_;
  double p_contr_;
  std::vector<std::string> warnings_;
};

DensityField apply_Q(const DensityField& u, const OperatorContext& ctx);
DensityField apply_Bc(const DensityField& u, double c, const OperatorContext& ctx);
/// Dispersing part evaluated on the shifted field; B_c + C_c equals
/// apply_Q(shift_sample(u, c)) term by term.
DensityField apply_Cc(const DensityField& u, double c, const OperatorContext& ctx);
/// Q_c[u] = B_c[u] + C_c[u].
DensityField apply_Qc(const DensityField& u, double c, const OperatorContext& ctx);

/// R_c[u] = max(phi, Q[u(. + c)]).
DensityField apply_Rc(const DensityField& u, double c, const DensityField& phi, const OperatorContext& ctx);

struct GcSolution {
  DensityField u;
  int iterations = 0;
  double residual = 0.0;  // sup |u - B_c[u] - w|
};

/// Solves u - B_c[u] = w by Picard iteration from u_0 = w. Throws
/// ContractionViolated when p_contr >= 1, NoConvergence after max_iter.
GcSolution solve_Gc(const DensityField& w, double c, const OperatorContext& ctx, double tol, int max_iter);

/// Growth factor of the grid operator Q_c linearised at 0 on exp(-mu x):
/// [g'(0) + s p_A W_A(mu) + p_J F'(0) W_J(mu)] * I_c(mu), with W the stencil
/// moment generating functions and I_c the interpolation factor of the shift.
double linearized_growth_factor(double mu, double c, const OperatorContext& ctx);

}  // namespace sedwave
