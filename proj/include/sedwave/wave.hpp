#pragma once

// Monotone traveling waves W(x - n c) of the grid recursion N_{n+1} = Q[N_n].

#include <optional>

#include "sedwave/operators.hpp"

namespace sedwave {

/// phi = half_height for x <= -ramp_width, linear down to 0 at x = 0, zero
/// for x >= 0. ext_left = half_height, ext_right = 0.
DensityField initial_phi(const Grid& grid, double half_height, double ramp_width);
DensityField initial_phi(const OperatorContext& ctx, double half_height, double ramp_width);
/// Defaults: half_height = M/2, ramp_width = 10 dx.
DensityField initial_phi(const OperatorContext& ctx);

struct WeinbergerResult {
  DensityField a;
  int iterations = 0;
  double last_increment = 0.0;
  double max_decrease = 0.0;  // largest a_n - a_{n+1}; zero for a monotone sequence
  bool converged = false;
};

/// Iterates a_{n+1} = R_c[a_n] from a_0 = phi until the sup-norm increment is
/// at most tol. Throws NoConvergence after max_iter.
WeinbergerResult weinberger_limit(double c, const OperatorContext& ctx, const DensityField& phi, double tol,
                                  int max_iter);

struct WaveOptions {
  double tol = 1e-8;          // relative to M, on the pinned sup-norm increment
  int max_iter = 20000;
  double tol_a = 1e-6;        // relative to M, for the seed limit a(c; .)
  int max_iter_a = 3000;      // budget for the seed; the seed need not converge
  double edge_tol = 1e-2;
  double edge_margin = 0.05;  // fraction of grid points excluded at each end
  double tail_level = 1e-8;   // relative to M; where the leading-edge tail is imposed
  std::optional<double> half_height;  // default M/2
  std::optional<double> ramp_width;   // default 10 dx
};

struct WaveProfile {
  double c = 0.0;
  DensityField W;
  double residual = 0.0;  // sup |W - Q_c[W]| away from the edge margin
  int iterations_a = 0;
  int iterations_phi = 0;
  bool seed_converged = false;
  double final_increment = 0.0;
  double pin_shift = 0.0;         // translation removed in the final step
  double max_phi_increase = 0.0;  // largest (Q_c[phi_n] - phi_n) before pinning
  double tail_rate = 0.0;         // decay rate mu of the leading edge
  bool tail_imposed = false;
};

/// Builds a monotone wave of speed c. The seed is the limit a(c; .) of the
/// R_c recursion with its leading edge replaced by the exponential tail of the
/// linearised grid operator; the sequence phi_{n+1} = Q_c[phi_n] is then
/// iterated with each iterate translated so its M/2 crossing sits at x = 0.
///
/// For speeds where the linearised grid operator admits a decaying mode
/// exp(-mu x) with a well-separated faster mode, that tail is re-imposed below
/// tail_level * M on every step, standing in for the part of the habitat
/// beyond the grid. Otherwise the leading edge evolves freely.
///
/// Throws ContractionViolated, DegenerateWave (saturation below the spreading
/// speed, collapse) or NoConvergence.
WaveProfile construct_wave(double c, const OperatorContext& ctx, const WaveOptions& opts = {});

struct VerifyOptions {
  double edge_margin = 0.05;
  double residual_tol = 1e-4;  // relative to M
  double monotone_tol = 1e-10; // absolute
  double boundary_tol = 1e-2;  // relative to M
  int n_gen = 10;
  double drift_tol = 1e-2;     // relative to M, over n_gen generations
};

struct VerificationReport {
  double residual = 0.0;                // sup |W - B_c[W] - C_c[W]| away from the edges
  double monotonicity_violation = 0.0;
  double boundary_left_error = 0.0;     // |W(x_min) - M|
  double boundary_right_error = 0.0;    // |W(x_max)|
  double simulation_drift = 0.0;        // translation_drift over n_gen generations
  bool residual_ok = false;
  bool monotone_ok = false;
  bool boundary_ok = false;
  bool simulation_ok = false;

  bool passed() const noexcept { return residual_ok && monotone_ok && boundary_ok && simulation_ok; }
};

/// max over n <= n_gen of sup |Q^n[W] - W(. - n c)|, taken over grid points
/// that lie at least `margin` points from both edges and whose source point
/// x - n c does as well; points fed by the constant extensions are skipped.
double translation_drift(const DensityField& W, double c, const OperatorContext& ctx, int n_gen, std::size_t margin);

VerificationReport verify_wave(const WaveProfile& wave, const OperatorContext& ctx, const VerifyOptions& opts = {});

}  // namespace sedwave
