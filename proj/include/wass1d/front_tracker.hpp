#pragma once

#include <optional>
#include <vector>

#include "wass1d/flux.hpp"
#include "wass1d/step_function.hpp"

namespace wass1d {

/// Rankine-Hugoniot speed (f(u_left) - f(u_right)) / (u_left - u_right).
/// Only admissible shocks (u_left > u_right) are accepted.
double shock_speed(double u_left, double u_right, const ConvexFlux& f);

/// Shock configuration at one instant: positions of the fronts, the constant
/// states between them, and the front speeds.
struct FrontState {
  double time = 0.0;
  std::vector<double> positions;  // strictly increasing
  std::vector<double> values;     // one more than positions, strictly decreasing
  std::vector<double> speeds;     // per front

  static FrontState from_step_function(const StepFunction& u, const ConvexFlux& f,
                                       double time = 0.0);
  StepFunction to_step_function() const;

  /// Lax admissibility f'(left) >= D >= f'(right) across every front.
  bool lax_admissible(const ConvexFlux& f, double tol = 1e-12) const;
};

/// Earliest collision among adjacent converging fronts, measured from
/// state.time. Absent when no pair converges.
std::optional<double> first_interaction_time(const FrontState& state);

/// Exact entropy solution at time t for decreasing piecewise-constant data:
/// fronts advance linearly, coincident fronts merge between their outermost
/// states, repeat through every interaction.
StepFunction evolve(const StepFunction& u0, const ConvexFlux& f, double t);

/// Total variation of a step function (re-exported next to the solver that
/// relies on it).
double tv(const StepFunction& u);

}  // namespace wass1d
