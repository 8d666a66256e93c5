#include "sedwave/errors.hpp"

#include <cstdio>

namespace sedwave {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ContractionViolated::ContractionViolated(double p_contr)
    : Error("contraction condition violated: s(1-p_A) + (1-p_J)kr = " + fmt_double(p_contr) +
            " >= 1"),
      p_contr_(p_contr) {}

NoConvergence::NoConvergence(const std::string& stage, int iterations, double last_increment)
    : Error(stage + ": no convergence after " + std::to_string(iterations) +
            " iterations (last increment " + fmt_double(last_increment) + ")"),
      iterations_(iterations),
      last_increment_(last_increment) {}

DegenerateWave::DegenerateWave(Kind kind, const std::string& detail)
    : Error(std::string("degenerate wave (") +
            (kind == Kind::Saturated ? "saturated" : "collapsed") + "): " + detail),
      kind_(kind) {}

LevelNotCrossed::LevelNotCrossed(int generation, double level)
    : Error("level " + fmt_double(level) + " not crossed in generation " +
            std::to_string(generation)),
      generation_(generation) {}

}  // namespace sedwave
