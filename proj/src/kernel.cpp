#include "sedwave/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sedwave/errors.hpp"

namespace sedwave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double interp_table(const std::vector<double>& x, const std::vector<double>& y, double at) noexcept {
  if (at < x.front() || at > x.back()) return 0.0;
  auto it = std::upper_bound(x.begin(), x.end(), at);
  if (it == x.end()) return y.back();
  const std::size_t j = static_cast<std::size_t>(it - x.begin()) - 1;
  const double t = (at - x[j]) / (x[j + 1] - x[j]);
  return y[j] + t * (y[j + 1] - y[j]);
}

}  // namespace

Kernel Kernel::gaussian(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("Gaussian kernel: sigma must be positive");
  return Kernel(Kind::Gaussian, sigma);
}

Kernel Kernel::laplace(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("Laplace kernel: b must be positive");
  return Kernel(Kind::Laplace, b);
}

Kernel Kernel::tabulated(const std::vector<double>& x, const std::vector<double>& k) {
  if (x.size() != k.size() || x.size() < 2)
    throw std::invalid_argument("tabulated kernel: need at least two (x, K) samples");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(k[i]) || k[i] < 0.0)
      throw std::invalid_argument("tabulated kernel: samples must be finite with K >= 0");
    if (i > 0 && !(x[i] > x[i - 1]))
      throw std::invalid_argument("tabulated kernel: x must be strictly increasing");
  }

  std::vector<double> nodes;
  nodes.reserve(2 * x.size());
  for (double v : x) {
    nodes.push_back(v);
    nodes.push_back(-v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<double> vals(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    vals[i] = 0.5 * (interp_table(x, k, nodes[i]) + interp_table(x, k, -nodes[i]));

  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    mass += 0.5 * (nodes[i + 1] - nodes[i]) * (vals[i] + vals[i + 1]);
  if (!(mass > 0.0)) throw std::invalid_argument("tabulated kernel: zero mass");
  for (double& v : vals) v /= mass;

  Kernel out(Kind::Tabulated, nodes.back());
  out.tx_ = std::move(nodes);
  out.tk_ = std::move(vals);
  return out;
}

double Kernel::density(double x) const noexcept {
  switch (kind_) {
    case Kind::Gaussian:
      return std::exp(-0.5 * (x / scale_) * (x / scale_)) / (scale_ * std::sqrt(2.0 * std::numbers::pi));
    case Kind::Laplace:
      return std::exp(-std::abs(x) / scale_) / (2.0 * scale_);
    case Kind::Tabulated:
      return interp_table(tx_, tk_, x);
  }
  return 0.0;
}

double Kernel::mgf_bound() const noexcept { return kind_ == Kind::Laplace ? 1.0 / scale_ : kInf; }

double Kernel::mgf(double mu) const {
  if (!std::isfinite(mu)) throw DomainError("kernel mgf: mu must be finite");
  switch (kind_) {
    case Kind::Gaussian:
      return std::exp(0.5 * scale_ * scale_ * mu * mu);
    case Kind::Laplace: {
      const double bound = 1.0 / scale_;
      if (!(std::abs(mu) < bound))
        throw DomainError("Laplace kernel mgf: |mu| must be below 1/b", -bound, bound);
      return 1.0 / (1.0 - scale_ * scale_ * mu * mu);
    }
    case Kind::Tabulated: {
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < tx_.size(); ++i) {
        acc += 0.5 * (tx_[i + 1] - tx_[i]) *
               (std::exp(mu * tx_[i]) * tk_[i] + std::exp(mu * tx_[i + 1]) * tk_[i + 1]);
      }
      return acc;
    }
  }
  return 0.0;
}

double Kernel::mass_tail(double a) const noexcept {
  switch (kind_) {
    case Kind::Gaussian:
      return 0.5 * std::erfc(a / (scale_ * std::numbers::sqrt2));
    case Kind::Laplace:
      return a >= 0.0 ? 0.5 * std::exp(-a / scale_) : 1.0 - 0.5 * std::exp(a / scale_);
    case Kind::Tabulated: {
      // Exact integral of the piecewise-linear table over [a, +inf).
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < tx_.size(); ++i) {
        const double lo = std::max(a, tx_[i]);
        const double hi = tx_[i + 1];
        if (hi <= lo) continue;
        acc += 0.5 * (hi - lo) * (interp_table(tx_, tk_, lo) + interp_table(tx_, tk_, hi));
      }
      return acc;
    }
  }
  return 0.0;
}

double Kernel::support_half_width(double eps) const noexcept {
  switch (kind_) {
    case Kind::Laplace:
      return scale_ * std::log(1.0 / eps);
    case Kind::Tabulated:
      return std::max(std::abs(tx_.front()), std::abs(tx_.back()));
    case Kind::Gaussian: {
      double lo = 0.0;
      double hi = 40.0 * scale_;
      for (int it = 0; it < 200 && hi - lo > 1e-12 * scale_; ++it) {
        const double mid = 0.5 * (lo + hi);
        (2.0 * mass_tail(mid) > eps ? lo : hi) = mid;
      }
      return hi;
    }
  }
  return 0.0;
}

std::string Kernel::describe() const {
  char buf[96];
  switch (kind_) {
    case Kind::Gaussian:
      std::snprintf(buf, sizeof buf, "gaussian(sigma=%.17g)", scale_);
      break;
    case Kind::Laplace:
      std::snprintf(buf, sizeof buf, "laplace(b=%.17g)", scale_);
      break;
    case Kind::Tabulated:
      std::snprintf(buf, sizeof buf, "tabulated(%zu nodes, half-extent %.17g)", tx_.size(), scale_);
      break;
  }
  return buf;
}

double kernel_mgf(const Kernel& kernel, double mu) { return kernel.mgf(mu); }

double mass_tail(const Kernel& kernel, double a) { return kernel.mass_tail(a); }

ConvolutionStencil::ConvolutionStencil(const Kernel& kernel, double dx, double mass_eps)
    : dx_(dx), scale_(kernel.scale()), kind_(kernel.kind()) {
  if (!(dx > 0.0)) throw std::invalid_argument("ConvolutionStencil: dx must be positive");
  const double reach = kernel.support_half_width(mass_eps);
  half_ = static_cast<std::size_t>(std::ceil(reach / dx));

  std::vector<double> side(half_ + 1);
  for (std::size_t m = 0; m <= half_; ++m) side[m] = dx * kernel.density(static_cast<double>(m) * dx);
  double total = side[0];
  for (std::size_t m = 1; m <= half_; ++m) total += 2.0 * side[m];
  if (!(total > 0.0)) throw std::invalid_argument("ConvolutionStencil: kernel not resolved by dx");
  for (double& w : side) w /= total;

  full_.resize(2 * half_ + 1);
  for (std::size_t m = 0; m <= half_; ++m) {
    full_[half_ + m] = side[m];
    full_[half_ - m] = side[m];
  }
  tail_.assign(half_ + 2, 0.0);
  for (std::size_t q = half_ + 1; q-- > 0;) tail_[q] = tail_[q + 1] + side[q];
}

double ConvolutionStencil::weight(std::ptrdiff_t m) const noexcept {
  const std::size_t a = static_cast<std::size_t>(m < 0 ? -m : m);
  return a > half_ ? 0.0 : full_[half_ + a];
}

double ConvolutionStencil::mgf(double mu) const noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < full_.size(); ++i) {
    const double offset = (static_cast<double>(i) - static_cast<double>(half_)) * dx_;
    acc += full_[i] * std::exp(mu * offset);
  }
  return acc;
}

std::optional<std::string> ConvolutionStencil::accuracy_warning(const Grid& grid) const {
  char buf[160];
  if (kind_ != Kernel::Kind::Tabulated && scale_ < 2.0 * dx_) {
    std::snprintf(buf, sizeof buf, "kernel scale %.6g under-resolved by dx = %.6g", scale_, dx_);
    return std::string(buf);
  }
  const double reach = static_cast<double>(half_) * dx_;
  if (reach > grid.x_max() - grid.x_min()) {
    std::snprintf(buf, sizeof buf, "kernel support %.6g exceeds the domain width %.6g", reach,
                  grid.x_max() - grid.x_min());
    return std::string(buf);
  }
  return std::nullopt;
}

}  // namespace sedwave
