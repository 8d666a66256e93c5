#pragma once

// Symmetric dispersal kernels K(|x|) and their lattice discretisation.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedwave/field.hpp"

namespace sedwave {

class Kernel {
 public:
  enum class Kind { Gaussian, Laplace, Tabulated };

  static Kernel gaussian(double sigma);
  /// K(x) = exp(-|x|/b) / (2b).
  static Kernel laplace(double b);
  /// Samples (x, K) with strictly increasing x. The table is symmetrised,
  /// (K(x) + K(-x)) / 2 on the union of the abscissae and their mirror images,
  /// then renormalised to unit trapezoidal mass. K vanishes outside the table.
  static Kernel tabulated(const std::vector<double>& x, const std::vector<double>& k);

  Kind kind() const noexcept { return kind_; }
  /// sigma for Gaussian, b for Laplace, half-extent of the table otherwise.
  double scale() const noexcept { return scale_; }
  const std::vector<double>& table_x() const noexcept { return tx_; }
  const std::vector<double>& table_k() const noexcept { return tk_; }

  double density(double x) const noexcept;

  /// Moment generating function; DomainError outside (-mgf_bound, mgf_bound).
  double mgf(double mu) const;
  /// Supremum of admissible |mu|; +inf when every finite mu is admissible.
  double mgf_bound() const noexcept;

  /// Probability mass on [a, +inf).
  double mass_tail(double a) const noexcept;

  /// Smallest L with mass outside [-L, L] at most `eps`.
  double support_half_width(double eps) const noexcept;

  std::string describe() const;

  bool operator==(const Kernel&) const = default;

 private:
  Kernel(Kind kind, double scale) : kind_(kind), scale_(scale) {}

  Kind kind_;
  double scale_;
  std::vector<double> tx_;
  std::vector<double> tk_;
};

double kernel_mgf(const Kernel& kernel, double mu);
double mass_tail(const Kernel& kernel, double a);

/// Trapezoidal weights w_m = dx K(m dx) for |m| <= half_width, truncated where
/// the remaining kernel mass is below `mass_eps` and rescaled to unit sum. The
/// weights are the trapezoidal rule on the infinite lattice; extension values
/// beyond a grid enter through the lattice tail sums.
class ConvolutionStencil {
 public:
  ConvolutionStencil(const Kernel& kernel, double dx, double mass_eps = 1e-14);

  double dx() const noexcept { return dx_; }
  std::size_t half_width() const noexcept { return half_; }
  /// Full symmetric weight vector, index m + half_width for m in [-hw, hw].
  std::span<const double> weights() const noexcept { return full_; }
  double weight(std::ptrdiff_t m) const noexcept;
  /// sum_{m >= q} w_m; zero beyond the stencil.
  double tail(std::size_t q) const noexcept { return q < tail_.size() ? tail_[q] : 0.0; }

  /// sum_m w_m exp(mu m dx): the moment generating function seen by the grid.
  double mgf(double mu) const noexcept;

  /// Diagnostic when the kernel is under-resolved or wider than the grid.
  std::optional<std::string> accuracy_warning(const Grid& grid) const;

 private:
  double dx_;
  std::size_t half_;
  double scale_;
  Kernel::Kind kind_;
  std::vector<double> full_;
  std::vector<double> tail_;
};

struct Convolved {
  DensityField field;
  std::optional<std::string> warning;
};

/// v(x_i) = integral K(|x_i - y|) u(y) dy with u extended by its constant
/// extensions. Parallel over output points.
DensityField convolve(const DensityField& u, const ConvolutionStencil& stencil);

/// Serial reference implementation of the same lattice sum over an explicitly
/// padded copy of u. Kept for testing and benchmarking.
DensityField convolve_reference(const DensityField& u, const ConvolutionStencil& stencil);

Convolved convolve(const DensityField& u, const Kernel& kernel);

/// w(x_i) = u(x_i + c) by linear interpolation on the lattice extended with
/// ext_left / ext_right nodes. Grid-aligned shifts are exact index shifts.
DensityField shift_sample(const DensityField& u, double c);

}  // namespace sedwave
