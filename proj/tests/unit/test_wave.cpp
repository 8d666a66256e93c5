#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sedwave/errors.hpp"
#include "sedwave/speed.hpp"
#include "sedwave/wave.hpp"
#include "support.hpp"

using namespace sedwave;
using sedwave::testing::gaussian_context;
using sedwave::testing::params;

namespace {

const Grid kGrid = Grid::from_range(-30.0, 120.0, 3001);

const OperatorContext& context() {
  static const OperatorContext ctx = gaussian_context(params(0.5, 2, 100, 1, 1), kGrid);
  return ctx;
}

double c_star() {
  static const double c = spreading_speed(context()).c_star;
  return c;
}

double max_slope(const DensityField& w) {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) m = std::max(m, (w[i] - w[i + 1]) / w.grid().dx());
  return m;
}

std::size_t margin() { return static_cast<std::size_t>(0.05 * kGrid.size()); }

}  // namespace

TEST_CASE("initial_phi") {
  const auto phi = initial_phi(context());
  CHECK(phi.ext_left() == 50.0);
  CHECK(phi.ext_right() == 0.0);
  CHECK(monotonicity_violation(phi) == 0.0);
  for (std::size_t i = 0; i < kGrid.size(); ++i) {
    if (kGrid.x(i) >= -1e-12) CHECK(phi[i] == 0.0);
    if (kGrid.x(i) <= -10 * kGrid.dx()) CHECK(phi[i] == 50.0);
  }
  const auto custom = initial_phi(context(), 25.0, 2.0);
  CHECK(custom.ext_left() == 25.0);
  CHECK(custom[static_cast<std::size_t>(29.0 / kGrid.dx())] == doctest::Approx(12.5));
  CHECK_THROWS_AS(initial_phi(context(), 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(initial_phi(context(), 100.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(initial_phi(context(), 50.0, 0.0), std::invalid_argument);
}

TEST_CASE("Weinberger recursion at a fast frame speed") {
  const auto res = weinberger_limit(3.0 * c_star(), context(), initial_phi(context()), 1e-6 * 100, 2000);
  CHECK(res.converged);
  CHECK(res.max_decrease == 0.0);
  CHECK(res.a.ext_left() == doctest::Approx(100.0).epsilon(1e-5));
  CHECK(res.a[0] > 90.0);
  CHECK(res.a[kGrid.size() - 1] < 1e-100);
  CHECK(res.a.max() <= 100.0);
}

TEST_CASE("Weinberger recursion in a standing frame fills the habitat") {
  const auto res = weinberger_limit(0.0, context(), initial_phi(context()), 1e-6 * 100, 2000);
  CHECK(res.max_decrease == 0.0);
  for (std::size_t i = margin(); i + margin() < kGrid.size(); ++i) CHECK(res.a[i] >= 99.0);
  // The zero extension beyond the truncated habitat leaves a boundary layer.
  CHECK(res.a[kGrid.size() - 1] > 10.0);
}

TEST_CASE("Weinberger limits decrease with frame speed") {
  const auto phi = initial_phi(context());
  const auto slow = weinberger_limit(1.2 * c_star(), context(), phi, 1e-8, 2000);
  const auto fast = weinberger_limit(1.6 * c_star(), context(), phi, 1e-8, 2000);
  for (std::size_t i = 0; i < kGrid.size(); ++i) CHECK(slow.a[i] >= fast.a[i] - 1e-8);
}

TEST_CASE("Weinberger budget exhaustion") {
  CHECK_THROWS_AS(weinberger_limit(c_star(), context(), initial_phi(context()), 1e-12, 3), NoConvergence);
}

TEST_CASE("waves at and above the spreading speed") {
  const auto at = construct_wave(c_star(), context());
  const auto above = construct_wave(1.5 * c_star(), context());
  for (const auto* w : {&at, &above}) {
    CHECK(monotonicity_violation(w->W) <= 1e-10);
    CHECK(w->W[0] >= 99.0);
    CHECK(w->W[kGrid.size() - 1] <= 1.0);
    CHECK(w->residual <= 1e-4 * 100);
    CHECK(*rightmost_crossing(w->W, 50.0) == doctest::Approx(0.0).epsilon(1e-9));
    const auto rep = verify_wave(*w, context());
    CHECK(rep.passed());
  }
  CHECK_FALSE(at.tail_imposed);
  CHECK(above.tail_imposed);
  CHECK(above.residual <= 1e-6 * 100);
  CHECK(max_slope(above.W) < max_slope(at.W));
}

TEST_CASE("no wave below the spreading speed") {
  try {
    (void)construct_wave(0.5 * c_star(), context());
    FAIL("expected DegenerateWave");
  } catch (const DegenerateWave& e) {
    CHECK(e.kind() == DegenerateWave::Kind::Saturated);
  }
}

TEST_CASE("construct_wave needs a contraction") {
  const auto ctx = gaussian_context(params(0.5, 2, 100, 0, 0), kGrid);
  CHECK_THROWS_AS(construct_wave(1.0, ctx), ContractionViolated);
}

TEST_CASE("construct_wave budget") {
  WaveOptions opts;
  opts.max_iter = 5;
  CHECK_THROWS_AS(construct_wave(c_star(), context(), opts), NoConvergence);
}

TEST_CASE("verify_wave on the trivial fixed points") {
  WaveProfile full{c_star(), DensityField::constant(kGrid, 100.0)};
  const auto rf = verify_wave(full, context());
  CHECK(rf.residual <= 1e-10);
  CHECK(rf.residual_ok);
  CHECK(rf.boundary_left_error == 0.0);
  CHECK(rf.boundary_right_error == 100.0);
  CHECK_FALSE(rf.boundary_ok);
  CHECK_FALSE(rf.passed());

  WaveProfile empty{c_star(), DensityField::constant(kGrid, 0.0)};
  const auto re = verify_wave(empty, context());
  CHECK(re.residual == 0.0);
  CHECK(re.boundary_left_error == 100.0);
  CHECK_FALSE(re.boundary_ok);
}

TEST_CASE("translation drift grows at most linearly") {
  const auto w = construct_wave(1.2 * c_star(), context());
  VerifyOptions one;
  one.n_gen = 1;
  VerifyOptions ten;
  ten.n_gen = 10;
  const auto r1 = verify_wave(w, context(), one);
  const auto r10 = verify_wave(w, context(), ten);
  CHECK(r10.simulation_drift <= 10.0 * r1.simulation_drift + 1e-9);
  CHECK(r10.simulation_ok);
}
