#include "wass1d/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "wass1d/errors.hpp"

namespace wass1d {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1)
    fail(Errc::InvalidConfig, "need one more value than breakpoints");
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
    if (!(breakpoints[k] < breakpoints[k + 1]))
      fail(Errc::InvalidConfig, "breakpoints must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) fail(Errc::InvalidConfig, "plateau values must be finite");
  for (double x : breakpoints)
    if (!std::isfinite(x)) fail(Errc::InvalidConfig, "breakpoints must be finite");

  // Merge plateaus with no actual jump between them.
  vals_.push_back(values[0]);
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    if (values[k + 1] != vals_.back()) {
      xs_.push_back(breakpoints[k]);
      vals_.push_back(values[k + 1]);
    }
  }
}

StepFunction StepFunction::heaviside(double left_value, double right_value, double jump_at) {
  return StepFunction({jump_at}, {left_value, right_value});
}

double StepFunction::value_at(double x) const {
  // First breakpoint > x; value index equals count of breakpoints <= x.
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  return vals_[static_cast<std::size_t>(it - xs_.begin())];
}

double StepFunction::integrate(double a, double b) const {
  if (a > b) return -integrate(b, a);
  double total = 0.0;
  double x = a;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), a);
  std::size_t idx = static_cast<std::size_t>(it - xs_.begin());
  while (idx < xs_.size() && xs_[idx] < b) {
    total += vals_[idx] * (xs_[idx] - x);
    x = xs_[idx];
    ++idx;
  }
  total += vals_[idx] * (b - x);
  return total;
}

double StepFunction::tv() const {
  double t = 0.0;
  for (std::size_t k = 0; k + 1 < vals_.size(); ++k) t += std::abs(vals_[k + 1] - vals_[k]);
  return t;
}

bool StepFunction::is_decreasing() const {
  for (std::size_t k = 0; k + 1 < vals_.size(); ++k)
    if (!(vals_[k] > vals_[k + 1])) return false;
  return true;
}

double StepFunction::min_value() const { return *std::min_element(vals_.begin(), vals_.end()); }

double StepFunction::max_value() const { return *std::max_element(vals_.begin(), vals_.end()); }

StepFunction StepFunction::translated(double offset) const {
  StepFunction out = *this;
  for (double& x : out.xs_) x += offset;
  return out;
}

const char* to_string(Errc c) {
  switch (c) {
    case Errc::ExteriorJump: return "ExteriorJump";
    case Errc::IncompatibleFunctions: return "IncompatibleFunctions";
    case Errc::NotAShock: return "NotAShock";
    case Errc::NotDecreasing: return "NotDecreasing";
    case Errc::MissingLambda: return "MissingLambda";
    case Errc::NoWaveSpeed: return "NoWaveSpeed";
    case Errc::CflViolation: return "CflViolation";
    case Errc::MassMismatch: return "MassMismatch";
    case Errc::FarStateMismatch: return "FarStateMismatch";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InsufficientWindow: return "InsufficientWindow";
    case Errc::TailTooSharp: return "TailTooSharp";
    case Errc::IncompatibleCoefficients: return "IncompatibleCoefficients";
    case Errc::DegenerateError: return "DegenerateError";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace wass1d
