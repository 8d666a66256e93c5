#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sedwave/kernel.hpp"

namespace sedwave {

DensityField convolve(const DensityField& u, const ConvolutionStencil& stencil) {
  const Grid& g = u.grid();
  if (std::abs(g.dx() - stencil.dx()) > 1e-12 * g.dx())
    throw std::invalid_argument("convolve: stencil built for a different spacing");

  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  const std::ptrdiff_t hw = static_cast<std::ptrdiff_t>(stencil.half_width());
  const double* w = stencil.weights().data();
  const double* in = u.values().data();
  const double el = u.ext_left();
  const double er = u.ext_right();
  std::vector<double> out(u.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - hw);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, i + hw);
    // Symmetric weights: w[hw + (j - i)] == w[hw + (i - j)], so both arrays run forward.
    const double* wi = w + (hw - i + lo);
    const double* ui = in + lo;
    const std::ptrdiff_t len = hi - lo + 1;
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::ptrdiff_t t = 0; t < len; ++t) acc += wi[t] * ui[t];
    acc += el * stencil.tail(static_cast<std::size_t>(i + 1));
    acc += er * stencil.tail(static_cast<std::size_t>(n - i));
    out[static_cast<std::size_t>(i)] = acc;
  }
  return DensityField(g, std::move(out), el, er);
}

DensityField convolve_reference(const DensityField& u, const ConvolutionStencil& stencil) {
  const std::size_t n = u.size();
  const std::size_t hw = stencil.half_width();
  std::vector<double> padded(n + 2 * hw);
  for (std::size_t j = 0; j < padded.size(); ++j) {
    if (j < hw)
      padded[j] = u.ext_left();
    else if (j >= hw + n)
      padded[j] = u.ext_right();
    else
      padded[j] = u[j - hw];
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    // v_i = sum_m w_m u~_{i-m}; u~_j sits at padded[j + hw].
    for (std::size_t t = 0; t <= 2 * hw; ++t) {
      const auto m = static_cast<std::ptrdiff_t>(t) - static_cast<std::ptrdiff_t>(hw);
      acc += stencil.weight(m) * padded[i + 2 * hw - t];
    }
    out[i] = acc;
  }
  return DensityField(u.grid(), std::move(out), u.ext_left(), u.ext_right());
}

Convolved convolve(const DensityField& u, const Kernel& kernel) {
  ConvolutionStencil stencil(kernel, u.grid().dx());
  return {convolve(u, stencil), stencil.accuracy_warning(u.grid())};
}

DensityField shift_sample(const DensityField& u, double c) {
  const Grid& g = u.grid();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  const double steps = c / g.dx();
  const double nearest = std::round(steps);
  const bool aligned = std::abs(steps - nearest) <= 1e-9;
  const double base = aligned ? nearest : std::floor(steps);
  const double theta = aligned ? 0.0 : steps - base;
  const auto offset = static_cast<std::ptrdiff_t>(base);

  const double* in = u.values().data();
  const double el = u.ext_left();
  const double er = u.ext_right();
  auto at = [&](std::ptrdiff_t j) { return j < 0 ? el : (j >= n ? er : in[j]); };

  std::vector<double> out(u.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t j = i + offset;
    const double a = at(j);
    out[static_cast<std::size_t>(i)] = theta == 0.0 ? a : (1.0 - theta) * a + theta * at(j + 1);
  }
  return DensityField(g, std::move(out), el, er);
}

}  // namespace sedwave
