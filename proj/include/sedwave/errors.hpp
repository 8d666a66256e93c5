#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace sedwave {

/// Base class for every recoverable numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where a function is defined.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}
  explicit DomainError(const std::string& what)
      : DomainError(what, -std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()) {}

  /// Admissible open interval for the offending argument.
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// The sedentary growth map is not a strict contraction, so (I - B_c) cannot
/// be inverted by fixed-point iteration.
class ContractionViolated : public Error {
 public:
  explicit ContractionViolated(double p_contr);
  double p_contr() const noexcept { return p_contr_; }

 private:
  double p_contr_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& stage, int iterations, double last_increment);
  int iterations() const noexcept { return iterations_; }
  double last_increment() const noexcept { return last_increment_; }

 private:
  int iterations_;
  double last_increment_;
};

/// A traveling-wave iteration produced a profile that does not connect M to 0.
class DegenerateWave : public Error {
 public:
  enum class Kind { Saturated, Collapsed };
  DegenerateWave(Kind kind, const std::string& detail);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class LevelNotCrossed : public Error {
 public:
  LevelNotCrossed(int generation, double level);
  int generation() const noexcept { return generation_; }

 private:
  int generation_;
};

}  // namespace sedwave
