#pragma once

#include <vector>

namespace wass1d {

/// Piecewise constant function on the real line: K breakpoints, K+1 plateau
/// values, right-continuous at breakpoints. Adjacent equal plateaus are
/// merged on construction, so the breakpoint list identifies actual jumps.
class StepFunction {
 public:
  /// `breakpoints` strictly increasing, `values` one longer.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// Constant function.
  explicit StepFunction(double value) : vals_{value} {}

  static StepFunction heaviside(double left_value, double right_value, double jump_at);

  const std::vector<double>& breakpoints() const { return xs_; }
  const std::vector<double>& values() const { return vals_; }
  std::size_t jump_count() const { return xs_.size(); }

  double far_left() const { return vals_.front(); }
  double far_right() const { return vals_.back(); }

  double value_at(double x) const;

  /// Exact integral over [a, b] (length-weighted plateau sum).
  double integrate(double a, double b) const;

  /// Total variation: sum of absolute jumps.
  double tv() const;

  /// Strictly decreasing plateau values (the entropy-solver precondition).
  bool is_decreasing() const;

  double min_value() const;
  double max_value() const;

  /// Shifted copy x -> f(x - offset).
  StepFunction translated(double offset) const;

 private:
  std::vector<double> xs_;
  std::vector<double> vals_;
};

}  // namespace wass1d
