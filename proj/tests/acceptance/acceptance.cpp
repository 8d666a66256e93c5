// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance <id>     run criterion id (1..12)
//   acceptance all      run every criterion

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sedwave/errors.hpp"
#include "sedwave/simulate.hpp"
#include "sedwave/speed.hpp"
#include "sedwave/wave.hpp"

using namespace sedwave;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

ModelParams make_params(double s, double r, double M, double p_A, double p_J) {
  ModelParams p;
  p.s = s;
  p.r = r;
  p.M = M;
  p.p_A = p_A;
  p.p_J = p_J;
  return p;
}

OperatorContext gaussian_ctx(const ModelParams& p, const Grid& g, double sa = 1.0, double sj = -1.0) {
  return OperatorContext(p, Fecundity::beverton_holt(p), Kernel::gaussian(sa), Kernel::gaussian(sj > 0 ? sj : sa), g);
}

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> us(0.0, 0.95), ur(1.05, 5.0), uM(1.0, 1000.0), u01(0.0, 1.0);
  return make_params(us(rng), ur(rng), uM(rng), u01(rng), u01(rng));
}

DensityField random_field(const Grid& g, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(g.size());
  for (auto& x : v) x = u(rng);
  return DensityField(g, std::move(v), u(rng), u(rng));
}

DensityField random_monotone(const Grid& g, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<double> v(g.size());
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end(), std::greater<>());
  return DensityField(g, v, std::max(v.front(), u(rng)), std::min(v.back(), u(rng)));
}

DensityField step(const Grid& g, double M) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.x(i) < 0.0 ? M : 0.0;
  return DensityField(g, std::move(v), M, 0.0);
}

// The three parameter sets shared by the speed and wave criteria.
const double kSets[3][2] = {{1.0, 1.0}, {0.8, 0.8}, {0.9, 0.5}};
const Grid kWaveGrid = Grid::from_range(-30.0, 120.0, 6001);

std::size_t margin_of(const Grid& g) { return static_cast<std::size_t>(0.05 * static_cast<double>(g.size())); }

Outcome ac1() {
  std::mt19937_64 rng(101);
  const Grid g = Grid::from_range(-50.0, 50.0, 2048);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const ModelParams p = random_params(rng);
    const auto ctx = gaussian_ctx(p, g);
    const auto z = apply_Q(DensityField::constant(g, 0.0), ctx);
    const auto m = apply_Q(DensityField::constant(g, p.M), ctx);
    worst = std::max(worst, z.max() / p.M);
    for (double v : m.values()) worst = std::max(worst, std::abs(v - p.M) / p.M);
  }
  return {worst <= 1e-8, "max |Q[0]|, |Q[M]-M| over 20 random models = " + fmt("%.3g", worst) + " M (tol 1e-8 M)"};
}

Outcome ac2() {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> uc(-3.0, 3.0), u01(0.0, 1.0);
  const Grid g = Grid::from_range(-20.0, 20.0, 801);
  long violations = 0;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ModelParams p = random_params(rng);
    const auto ctx = gaussian_ctx(p, g, 0.5 + u01(rng), 0.5 + u01(rng));
    const auto v = random_field(g, 0.0, 0.6 * p.M, rng);
    std::vector<double> w(g.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i] + 0.4 * p.M * u01(rng);
    const DensityField u(g, w, v.ext_left() + 0.4 * p.M * u01(rng), v.ext_right() + 0.4 * p.M * u01(rng));
    const double c = uc(rng);
    const auto phi = random_monotone(g, 0.5 * p.M, rng);
    const std::pair<DensityField, DensityField> pairs[] = {
        {apply_Q(u, ctx), apply_Q(v, ctx)},
        {apply_Bc(u, c, ctx), apply_Bc(v, c, ctx)},
        {apply_Cc(u, c, ctx), apply_Cc(v, c, ctx)},
        {apply_Rc(u, c, phi, ctx), apply_Rc(v, c, phi, ctx)}};
    for (const auto& [hi, lo] : pairs) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double gap = lo[i] - hi[i];
        if (gap > 1e-12 * p.M) ++violations;
        worst = std::max(worst, gap / p.M);
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " order violations in 200 pairs x {Q, B_c, C_c, R_c}; max (lower - upper) = " +
                               fmt("%.3g", worst) + " M"};
}

Outcome ac3() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u01(0.01, 0.99);
  const Grid g = Grid::from_range(-20.0, 20.0, 801);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const ModelParams p = random_params(rng);
    const auto ctx = gaussian_ctx(p, g, 0.7, 1.3);
    double alpha = u01(rng) * p.M;
    const auto traj = simulate(DensityField::constant(g, alpha), ctx, 50);
    for (std::size_t n = 1; n < traj.size(); ++n) {
      alpha = p.s * alpha + beverton_holt(alpha, p);
      for (double v : traj[n].values()) worst = std::max(worst, std::abs(v - alpha) / p.M);
    }
  }
  return {worst <= 1e-8, "max |N_n - alpha_n| over 10 orbits x 50 steps = " + fmt("%.3g", worst) + " M (tol 1e-8 M)"};
}

Outcome ac4() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  const Grid g = Grid::from_range(-20.0, 20.0, 801);
  int solved = 0;
  int raised = 0;
  int checked_violated = 0;
  double worst_res = 0.0;
  int over_bound = 0;
  while (solved < 50) {
    const ModelParams p = random_params(rng);
    const auto ctx = gaussian_ctx(p, g);
    const double tol = 1e-8 * p.M;
    const auto w = random_monotone(g, p.M, rng);
    if (ctx.p_contr() >= 1.0) {
      ++checked_violated;
      try {
        (void)solve_Gc(w, uc(rng), ctx, tol, 10000);
      } catch (const ContractionViolated&) {
        ++raised;
      }
      continue;
    }
    if (ctx.p_contr() > 0.9) continue;
    const auto sol = solve_Gc(w, uc(rng), ctx, tol, 10000);
    worst_res = std::max(worst_res, sol.residual / p.M);
    const double bound =
        ctx.p_contr() > 0.0 ? std::ceil(std::log(tol / w.max()) / std::log(ctx.p_contr())) + 1.0 : 1.0;
    if (sol.iterations > bound) ++over_bound;
    ++solved;
  }
  const bool pass = worst_res <= 1e-8 && over_bound == 0 && raised == checked_violated && checked_violated > 0;
  return {pass, "50 solves: max residual " + fmt("%.3g", worst_res) + " M, " + std::to_string(over_bound) +
                    " over the geometric bound; ContractionViolated raised " + std::to_string(raised) + "/" +
                    std::to_string(checked_violated)};
}

Outcome ac5() {
  const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, 1, 1), Grid::from_range(-50, 150, 4096));
  const double oracle = std::sqrt(2.0 * std::log(1.5));
  const double err = std::abs(spreading_speed(ctx).c_star - oracle);
  return {err <= 1e-6, "|c* - sqrt(2 ln 1.5)| = " + fmt("%.3g", err) + " (tol 1e-6)"};
}

Outcome ac6() {
  const Grid g = Grid::from_range(-50.0, 150.0, 4096);
  Outcome out{true, ""};
  for (const auto& set : kSets) {
    const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, set[0], set[1]), g);
    const auto t0 = std::chrono::steady_clock::now();
    const auto speed = spreading_speed(ctx);
    const auto trace = track_front(simulate(step(g, 100.0), ctx, 60), 50.0, {30, 60});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rel = std::abs(trace.fitted_speed - speed.c_star) / speed.c_star;
    out.pass = out.pass && rel <= 0.02 && secs < 60.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s(%.1f,%.1f): fitted %.5f vs c* %.5f, rel %.4f, %.1fs", out.detail.empty() ? "" : "; ",
                  set[0], set[1], trace.fitted_speed, speed.c_star, rel, secs);
    out.detail += buf;
  }
  out.detail += " (tol 0.02, < 60 s per set)";
  return out;
}

Outcome ac7() {
  Outcome out{true, ""};
  for (const auto& set : kSets) {
    const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, set[0], set[1]), kWaveGrid);
    const double cs = spreading_speed(ctx).c_star;
    for (double f : {1.0, 1.2}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto w = construct_wave(f * cs, ctx);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto rep = verify_wave(w, ctx);
      const bool ok = rep.monotonicity_violation <= 1e-10 && rep.boundary_left_error <= 1.0 &&
                      rep.boundary_right_error <= 1.0 && w.residual <= 1e-2 && rep.residual <= 1e-2 && secs < 120.0;
      out.pass = out.pass && ok;
      char buf[220];
      std::snprintf(buf, sizeof buf, "%s(%.1f,%.1f) %.1fc*: res %.2g M, mono %.2g, bd %.2g/%.2g M, %.1fs",
                    out.detail.empty() ? "" : "; ", set[0], set[1], f, rep.residual / 100.0, rep.monotonicity_violation,
                    rep.boundary_left_error / 100.0, rep.boundary_right_error / 100.0, secs);
      out.detail += buf;
    }
  }
  out.detail += " (tol res 1e-4 M, mono 1e-10, bd 1e-2 M, < 120 s)";
  return out;
}

Outcome ac8() {
  Outcome out{true, ""};
  for (const auto& set : kSets) {
    const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, set[0], set[1]), kWaveGrid);
    const double cs = spreading_speed(ctx).c_star;
    std::string what = "no exception";
    bool ok = false;
    try {
      (void)construct_wave(0.5 * cs, ctx);
    } catch (const DegenerateWave& e) {
      ok = e.kind() == DegenerateWave::Kind::Saturated;
      what = ok ? "DegenerateWave(saturated)" : "DegenerateWave(collapsed)";
    } catch (const std::exception& e) {
      what = e.what();
    }
    out.pass = out.pass && ok;
    out.detail += (out.detail.empty() ? "" : "; ") + fmt("(%.1f,", set[0]) + fmt("%.1f): ", set[1]) + what;
  }
  return out;
}

Outcome ac9() {
  Outcome out{true, ""};
  for (const auto& set : kSets) {
    const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, set[0], set[1]), kWaveGrid);
    const double cs = spreading_speed(ctx).c_star;
    for (double f : {1.0, 1.2}) {
      const auto w = construct_wave(f * cs, ctx);
      // Compared where both x and its source x - n c lie inside the 5% margins.
      const std::size_t m = margin_of(kWaveGrid);
      const double lo = kWaveGrid.x(m);
      const double hi = kWaveGrid.x(kWaveGrid.size() - 1 - m);
      DensityField n = w.W;
      double drift = 0.0;
      for (int gen = 1; gen <= 10; ++gen) {
        n = apply_Q(n, ctx);
        const auto target = shift_sample(w.W, -gen * w.c);
        for (std::size_t i = m; i + m < kWaveGrid.size(); ++i) {
          const double src = kWaveGrid.x(i) - gen * w.c;
          if (src >= lo && src <= hi) drift = std::max(drift, std::abs(n[i] - target[i]));
        }
      }
      out.pass = out.pass && drift <= 1.0;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s(%.1f,%.1f) %.1fc*: %.2g M", out.detail.empty() ? "" : "; ", set[0], set[1], f,
                    drift / 100.0);
      out.detail += buf;
    }
  }
  out.detail = "max_n<=10 sup |Q^n W - W(. - nc)| " + out.detail + " (tol 1e-2 M)";
  return out;
}

// W shifted so its M/2 crossing sits at x = 0.
DensityField aligned(const DensityField& w, double M) {
  return shift_sample(w, *rightmost_crossing(w, 0.5 * M));
}

Outcome ac10() {
  Outcome out{true, ""};
  for (const auto& set : kSets) {
    const auto ctx = gaussian_ctx(make_params(0.5, 2, 100, set[0], set[1]), kWaveGrid);
    const double cs = spreading_speed(ctx).c_star;
    for (double f : {1.0, 1.2}) {
      WaveOptions quarter;
      quarter.half_height = 25.0;
      WaveOptions half;
      half.half_height = 50.0;
      const auto a = aligned(construct_wave(f * cs, ctx, quarter).W, 100.0);
      const auto b = aligned(construct_wave(f * cs, ctx, half).W, 100.0);
      const double d = sup_distance(a, b, margin_of(kWaveGrid));
      out.pass = out.pass && d <= 0.1;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s(%.1f,%.1f) %.1fc*: %.2g M", out.detail.empty() ? "" : "; ", set[0], set[1], f,
                    d / 100.0);
      out.detail += buf;
    }
  }
  out.detail = "sup |W_{M/4} - W_{M/2}| after alignment " + out.detail + " (tol 1e-3 M)";
  return out;
}

Outcome ac11() {
  const Grid g = Grid::from_range(-50, 150, 4096);
  const auto p = make_params(0.5, 2, 100, 1, 1);
  const double a = spreading_speed(gaussian_ctx(p, g, 1.0)).c_star;
  const double b = spreading_speed(gaussian_ctx(p, g, 2.0)).c_star;
  const double rel = std::abs(b / (2.0 * a) - 1.0);
  return {rel <= 1e-8, "|c*(2 sigma) / (2 c*(sigma)) - 1| = " + fmt("%.3g", rel) + " (tol 1e-8)"};
}

Outcome ac12() {
  // Pulled fronts lag c* by (3 / (2 mu*)) ln n; the speed is fitted over a
  // late window where that lag is a fraction of a percent.
  const auto p = make_params(0.5, 2, 100, 0.8, 0.8);
  const int n_gen = 600;
  const FitWindow window{300, 600};
  const double dx = 0.05;
  const auto probe = gaussian_ctx(p, Grid(-50.0, dx, 64), 0.5, 1.5);
  const double cs = spreading_speed(probe).c_star;
  const double x_max = std::ceil(cs * n_gen + 60.0);
  const Grid g(-50.0, dx, static_cast<std::size_t>(std::lround((x_max + 50.0) / dx)) + 1);
  const auto ctx = gaussian_ctx(p, g, 0.5, 1.5);
  const auto trace = track_front(simulate(step(g, 100.0), ctx, n_gen), 50.0, window);
  const double rel = std::abs(trace.fitted_speed - cs) / cs;
  char buf[200];
  std::snprintf(buf, sizeof buf, "K_A = G(0.5), K_J = G(1.5), p = 0.8: fitted %.5f over n in [300,600] vs c* %.5f, rel %.4f (tol 0.02)",
                trace.fitted_speed, cs, rel);
  return {rel <= 0.02, buf};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"fixed points Q[0]=0, Q[M]=M", ac1},
    {"order preservation", ac2},
    {"constant-orbit oracle", ac3},
    {"contraction solver", ac4},
    {"speed vs closed form", ac5},
    {"speed vs simulation (60 generations)", ac6},
    {"waves at c* and 1.2 c*", ac7},
    {"no wave at 0.5 c*", ac8},
    {"translation test", ac9},
    {"initial_phi independence", ac10},
    {"kernel scale equivariance", ac11},
    {"two-kernel speed vs simulation", ac12},
};

bool run_one(std::size_t id) {
  const auto& [name, fn] = kCriteria[id - 1];
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("AC%-2zu %s  %s: %s [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <1..%zu|all>\n", argv[0], kCriteria.size());
    return 2;
  }
  const std::string arg = argv[1];
  if (arg == "all") {
    bool ok = true;
    for (std::size_t id = 1; id <= kCriteria.size(); ++id) ok = run_one(id) && ok;
    return ok ? 0 : 1;
  }
  const long id = std::strtol(arg.c_str(), nullptr, 10);
  if (id < 1 || id > static_cast<long>(kCriteria.size())) {
    std::fprintf(stderr, "unknown criterion %s\n", arg.c_str());
    return 2;
  }
  return run_one(static_cast<std::size_t>(id)) ? 0 : 1;
}
