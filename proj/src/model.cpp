#include "sedwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sedwave/errors.hpp"

namespace sedwave {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

bool ValidationReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void ValidationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

double contraction_constant(const ModelParams& p) noexcept {
  return p.s * (1.0 - p.p_A) + (1.0 - p.p_J) * p.k() * p.r;
}

ValidationReport validate_params(const ModelParams& p) {
  ValidationReport rep;
  const bool finite = std::isfinite(p.s) && std::isfinite(p.r) && std::isfinite(p.M) &&
                      std::isfinite(p.p_A) && std::isfinite(p.p_J);
  rep.add("finite", finite, finite ? "" : "non-finite parameter");
  rep.add("s in [0,1)", p.s >= 0.0 && p.s < 1.0, p.s >= 0.0 && p.s < 1.0 ? "" : "s out of [0,1)");
  const double k = p.k();
  rep.add("k in (0,1]", k > 0.0 && k <= 1.0, "k = 1 - s = " + num(k));
  rep.add("r > 1", p.r > 1.0, p.r > 1.0 ? "" : "r = " + num(p.r) + " must exceed 1");
  rep.add("M > 0", p.M > 0.0, p.M > 0.0 ? "" : "M = " + num(p.M) + " must be positive");
  const bool pa = p.p_A >= 0.0 && p.p_A <= 1.0;
  rep.add("p_A in [0,1]", pa, pa ? "" : "p_A out of [0,1]");
  const bool pj = p.p_J >= 0.0 && p.p_J <= 1.0;
  rep.add("p_J in [0,1]", pj, pj ? "" : "p_J out of [0,1]");

  rep.p_contr = contraction_constant(p);
  rep.contraction_ok = *rep.p_contr < 1.0;
  return rep;
}

double beverton_holt(double u, const ModelParams& p) {
  if (!(u >= 0.0)) throw DomainError("beverton_holt: density must be non-negative", 0.0, HUGE_VAL);
  return p.k() * p.r * p.M * u / (p.M + (p.r - 1.0) * u);
}

Fecundity Fecundity::beverton_holt(const ModelParams& p) { return Fecundity(Kind::BevertonHolt, p); }

Fecundity Fecundity::tabulated(const ModelParams& p, std::vector<double> u, std::vector<double> f) {
  if (u.size() != f.size()) throw std::invalid_argument("fecundity table: column length mismatch");
  if (u.size() < 2) throw std::invalid_argument("fecundity table: need at least two samples");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]) || !std::isfinite(f[i]))
      throw std::invalid_argument("fecundity table: non-finite sample");
    if (i > 0 && !(u[i] > u[i - 1]))
      throw std::invalid_argument("fecundity table: densities must be strictly increasing");
  }
  const double tol = 1e-12 * p.M;
  if (u.front() > tol || u.back() < p.M - tol)
    throw std::invalid_argument("fecundity table: samples must cover [0, M]");
  Fecundity F(Kind::Tabulated, p);
  F.u_ = std::move(u);
  F.f_ = std::move(f);
  return F;
}

double Fecundity::operator()(double u) const {
  if (kind_ == Kind::BevertonHolt) return sedwave::beverton_holt(u, params_);
  if (!(u >= 0.0)) throw DomainError("fecundity: density must be non-negative", 0.0, HUGE_VAL);
  // Segment index j such that u_[j] <= u < u_[j+1], clamped to the end segments.
  auto it = std::upper_bound(u_.begin(), u_.end(), u);
  std::size_t j = it == u_.begin() ? 0 : static_cast<std::size_t>(it - u_.begin()) - 1;
  j = std::min(j, u_.size() - 2);
  const double t = (u - u_[j]) / (u_[j + 1] - u_[j]);
  return f_[j] + t * (f_[j + 1] - f_[j]);
}

double Fecundity::slope_at_zero() const noexcept {
  if (kind_ == Kind::BevertonHolt) return params_.k() * params_.r;
  return (f_[1] - f_[0]) / (u_[1] - u_[0]);
}

double Fecundity::max_slope() const noexcept {
  if (kind_ == Kind::BevertonHolt) return params_.k() * params_.r;
  double best = 0.0;
  for (std::size_t j = 0; j + 1 < u_.size(); ++j) {
    if (u_[j] >= params_.M) break;
    best = std::max(best, (f_[j + 1] - f_[j]) / (u_[j + 1] - u_[j]));
  }
  return best;
}

ValidationReport validate_fecundity(const Fecundity& F, const ModelParams& p, int n_check) {
  if (n_check < 2) throw std::invalid_argument("validate_fecundity: n_check must be >= 2");
  ValidationReport rep;
  const double M = p.M;
  const double k = p.k();
  const double kr = k * p.r;
  const double atol = 1e-12 * M;
  const double h = 1e-8 * M;
  const double rtol = 1e-6;

  std::vector<double> grid(n_check);
  std::vector<double> vals(n_check);
  bool finite = true;
  for (int i = 0; i < n_check; ++i) {
    grid[i] = M * static_cast<double>(i) / (n_check - 1);
    vals[i] = F(grid[i]);
    finite = finite && std::isfinite(vals[i]);
  }

  // H1: one-sided slopes agree at every check point (no kinks) up to rtol * kr.
  {
    bool ok = finite;
    std::string detail = finite ? "" : "non-finite value";
    for (int i = 1; i + 1 < n_check && ok; ++i) {
      const double u = grid[i];
      const double left = (F(u) - F(u - h)) / h;
      const double right = (F(u + h) - F(u)) / h;
      if (std::abs(right - left) > rtol * kr) {
        ok = false;
        detail = "slope jump " + num(right - left) + " at u = " + num(u);
      }
    }
    rep.add("H1 continuously differentiable", ok, detail);
  }

  // H2: F(0) = 0, F(M) = kM.
  {
    const bool zero = std::abs(vals.front()) <= atol;
    const bool cap = std::abs(vals.back() - k * M) <= 1e-9 * M;
    std::string detail;
    if (!zero) detail = "F(0) = " + num(vals.front());
    if (!cap) detail += (detail.empty() ? "" : "; ") + ("F(M) = " + num(vals.back()) + " != kM = " + num(k * M));
    rep.add("H2 F(0)=0, F(M)=kM", zero && cap, detail);
  }

  // H3: F(u) > k u strictly inside (0, M).
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i + 1 < n_check && ok; ++i) {
      if (!(vals[i] - k * grid[i] > atol)) {
        ok = false;
        detail = "F(u) <= ku at u = " + num(grid[i]);
      }
    }
    rep.add("H3 F(u)>ku on (0,M)", ok, detail);
  }

  // H4: F nondecreasing and F'(0) = kr.
  {
    bool ok = true;
    std::string detail;
    for (int i = 1; i < n_check && ok; ++i) {
      if (vals[i] < vals[i - 1] - atol) {
        ok = false;
        detail = "F decreases at u = " + num(grid[i]);
      }
    }
    const double d0 = (F(h) - F(0.0)) / h;
    if (ok && std::abs(d0 - kr) > rtol * kr + 2.0 * (p.r - 1.0) * kr * h / M) {
      ok = false;
      detail = "F'(0) = " + num(d0) + " != kr = " + num(kr);
    }
    rep.add("H4 F'>=0, F'(0)=kr", ok, detail);
  }

  // H5: F(u) <= k r u.
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n_check && ok; ++i) {
      if (vals[i] > kr * grid[i] + atol) {
        ok = false;
        detail = "F(u) > kru at u = " + num(grid[i]);
      }
    }
    rep.add("H5 F(u)<=kru", ok, detail);
  }

  // H6: F' non-increasing, from central differences (one-sided at the ends).
  {
    bool ok = true;
    std::string detail;
    double prev = 0.0;
    for (int i = 0; i < n_check && ok; ++i) {
      const double u = grid[i];
      double d;
      if (i == 0)
        d = (F(u + h) - F(u)) / h;
      else if (i + 1 == n_check)
        d = (F(u) - F(u - h)) / h;
      else
        d = (F(u + h) - F(u - h)) / (2.0 * h);
      if (i > 0 && d > prev + rtol * kr) {
        ok = false;
        detail = "F' increases at u = " + num(u);
      }
      prev = d;
    }
    rep.add("H6 F' non-increasing", ok, detail);
  }
  return rep;
}

double growth_lipschitz_bound(const ModelParams& p) noexcept { return contraction_constant(p); }

double growth_lipschitz_bound(const ModelParams& p, const Fecundity& F) noexcept {
  return p.s * (1.0 - p.p_A) + (1.0 - p.p_J) * F.max_slope();
}

}  // namespace sedwave
