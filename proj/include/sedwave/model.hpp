#pragma once

// Demographic parameters and fecundity maps of the partially sedentary
// two-stage population.

#include <optional>
#include <string>
#include <vector>

namespace sedwave {

/// Demographic constants. Juvenile survival is derived as k = 1 - s, so the
/// normalisation k + s = 1 holds by construction.
struct ModelParams {
  double s = 0.5;    // adult survival probability
  double r = 2.0;    // low-density offspring factor
  double M = 100.0;  // carrying capacity
  double p_A = 1.0;  // dispersing fraction of adults
  double p_J = 1.0;  // dispersing fraction of juveniles

  double k() const noexcept { return 1.0 - s; }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::optional<double> p_contr;
  bool contraction_ok = true;

  bool all_passed() const noexcept;
  void add(std::string name, bool passed, std::string detail = {});
};

/// s(1-p_A) + (1-p_J) k r.
double contraction_constant(const ModelParams& p) noexcept;

ValidationReport validate_params(const ModelParams& p);

/// F(u) = k r M u / (M + (r-1) u). Throws DomainError for u < 0.
double beverton_holt(double u, const ModelParams& p);

/// A fecundity map F on [0, M]: either Beverton-Holt or a monotone table
/// interpolated piecewise linearly.
class Fecundity {
 public:
  enum class Kind { BevertonHolt, Tabulated };

  static Fecundity beverton_holt(const ModelParams& p);

  /// `u` strictly increasing, covering [0, M]; `f` the sampled values.
  /// Samples are stored as given; monotonicity is a validation concern.
  static Fecundity tabulated(const ModelParams& p, std::vector<double> u, std::vector<double> f);

  Kind kind() const noexcept { return kind_; }
  const ModelParams& params() const noexcept { return params_; }
  const std::vector<double>& table_u() const noexcept { return u_; }
  const std::vector<double>& table_f() const noexcept { return f_; }

  /// Evaluates F(u). Negative u is a DomainError. Tables are extended beyond
  /// their last sample by their last segment.
  double operator()(double u) const;

  /// F'(0); the low-density slope.
  double slope_at_zero() const noexcept;

  /// sup of F' over [0, M].
  double max_slope() const noexcept;

 private:
  Fecundity(Kind kind, ModelParams p) : kind_(kind), params_(p) {}

  Kind kind_;
  ModelParams params_;
  std::vector<double> u_;
  std::vector<double> f_;
};

/// Checks the structural fecundity conditions H1-H6 at `n_check` equispaced
/// points of [0, M]. Smoothness (H1) and concavity (H6) use finite differences
/// with step 1e-8 M and relative tolerance 1e-6.
ValidationReport validate_fecundity(const Fecundity& F, const ModelParams& p, int n_check);

/// sup over [0, M] of d/dx [s(1-p_A) x + (1-p_J) F(x)] for Beverton-Holt;
/// attained at x = 0.
double growth_lipschitz_bound(const ModelParams& p) noexcept;

/// Same bound for an arbitrary fecundity map.
double growth_lipschitz_bound(const ModelParams& p, const Fecundity& F) noexcept;

}  // namespace sedwave
