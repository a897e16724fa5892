#pragma once

#include <vector>

#include "wass1d/grid.hpp"
#include "wass1d/step_function.hpp"

namespace wass1d {

/// Continuous piecewise-linear primitive x -> integral_{-inf}^x (u - v), built
/// on the merged breakpoints of a step-function pair. Vanishes outside the
/// breakpoint hull when the pair has equal far states and zero net mass.
struct PiecewiseLinear {
  std::vector<double> xs;     // node positions (merged breakpoints)
  std::vector<double> nodes;  // primitive values at the nodes

  double eval(double x) const;

  /// Exact integral of |primitive| over the hull, splitting intervals at
  /// interior zero crossings.
  double integral_abs() const;
};

/// Primitive of u - v. Requires equal far states.
PiecewiseLinear primitive_of_difference(const StepFunction& u, const StepFunction& v);

/// Exact 1-D Wasserstein distance: integral of |primitive of u - v|.
/// Requires equal far states and net mass zero within tolerance
/// (1e-10 * TV * span); a sub-tolerance mass defect is dropped beyond the
/// breakpoint hull rather than silently spread.
double w1(const StepFunction& u, const StepFunction& v);
double w1(const GridFunction& u, const GridFunction& v);
double w1(const StepFunction& u, const GridFunction& v);
double w1(const GridFunction& u, const StepFunction& v);

/// Value plus the repaired mass defect, for callers that must surface it.
struct W1Result {
  double value;
  double mass_defect;
};
W1Result w1_detailed(const StepFunction& u, const StepFunction& v);

/// Grid form: dx^2 * sum_i |sum_{j<i} (u_j - v_j)|. Same grid, equal far
/// states, zero net cell sum required.
double w1_discrete(const GridFunction& u, const GridFunction& v);

/// Exact integral of |u - v| over the merged breakpoints.
double l1_distance(const StepFunction& u, const StepFunction& v);
double l1_distance(const GridFunction& u, const GridFunction& v);
double l1_distance(const StepFunction& u, const GridFunction& v);
double l1_distance(const GridFunction& u, const StepFunction& v);

/// max_i |(phi_{i+1} - phi_i)| / dx over interior cell pairs.
double dlip_norm(const GridFunction& phi);

}  // namespace wass1d
