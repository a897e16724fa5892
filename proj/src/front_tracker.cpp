#include "wass1d/front_tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wass1d/errors.hpp"

namespace wass1d {

double shock_speed(double u_left, double u_right, const ConvexFlux& f) {
  if (!(u_left > u_right)) fail(Errc::NotAShock, "shock needs u_left > u_right");
  return (f(u_left) - f(u_right)) / (u_left - u_right);
}

FrontState FrontState::from_step_function(const StepFunction& u, const ConvexFlux& f,
                                          double time) {
  if (!u.is_decreasing()) fail(Errc::NotDecreasing, "entropy solver needs decreasing data");
  FrontState st;
  st.time = time;
  st.positions = u.breakpoints();
  st.values = u.values();
  st.speeds.reserve(st.positions.size());
  for (std::size_t k = 0; k < st.positions.size(); ++k)
    st.speeds.push_back(shock_speed(st.values[k], st.values[k + 1], f));
  return st;
}

StepFunction FrontState::to_step_function() const { return StepFunction(positions, values); }

bool FrontState::lax_admissible(const ConvexFlux& f, double tol) const {
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const double dl = f.f_prime(values[k]);
    const double dr = f.f_prime(values[k + 1]);
    if (!(dl >= speeds[k] - tol && speeds[k] >= dr - tol)) return false;
  }
  return true;
}

std::optional<double> first_interaction_time(const FrontState& state) {
  std::optional<double> best;
  for (std::size_t k = 1; k < state.positions.size(); ++k) {
    const double closing = state.speeds[k - 1] - state.speeds[k];
    if (closing > 0.0) {
      const double dt = (state.positions[k] - state.positions[k - 1]) / closing;
      if (!best || dt < *best) best = dt;
    }
  }
  return best;
}

namespace {

// Advance fronts by dt, then merge groups of coincident fronts into single
// fronts between the outermost states. Positions within pos_tol count as
// coincident (exact rational collisions must not split by rounding).
void advance_and_merge(FrontState& st, double dt, const ConvexFlux& f, double pos_tol) {
  for (std::size_t k = 0; k < st.positions.size(); ++k) st.positions[k] += dt * st.speeds[k];
  st.time += dt;

  FrontState merged;
  merged.time = st.time;
  merged.values.push_back(st.values.front());
  std::size_t k = 0;
  while (k < st.positions.size()) {
    std::size_t j = k;
    while (j + 1 < st.positions.size() && st.positions[j + 1] - st.positions[k] <= pos_tol) ++j;
    // Group [k, j] collapses to a single front between values[k] and values[j+1].
    merged.positions.push_back(st.positions[k]);
    merged.values.push_back(st.values[j + 1]);
    merged.speeds.push_back(shock_speed(st.values[k], st.values[j + 1], f));
    k = j + 1;
  }
  st = std::move(merged);
}

}  // namespace

StepFunction evolve(const StepFunction& u0, const ConvexFlux& f, double t) {
  if (t < 0.0) fail(Errc::InvalidConfig, "time must be nonnegative");
  if (u0.jump_count() == 0) return u0;
  if (!u0.is_decreasing()) fail(Errc::NotDecreasing, "entropy solver needs decreasing data");

  FrontState st = FrontState::from_step_function(u0, f);
  const double span = u0.jump_count() > 0
                          ? std::max(1.0, std::abs(u0.breakpoints().back()) +
                                              std::abs(u0.breakpoints().front()))
                          : 1.0;
  double remaining = t;
  const double time_tol = 1e-13 * std::max(1.0, t);
  while (remaining > 0.0) {
    const auto next = first_interaction_time(st);
    if (!next || *next > remaining + time_tol) {
      for (std::size_t k = 0; k < st.positions.size(); ++k)
        st.positions[k] += remaining * st.speeds[k];
      st.time += remaining;
      remaining = 0.0;
      break;
    }
    const double dt = std::min(*next, remaining);
    advance_and_merge(st, dt, f, 1e-12 * span);
    remaining -= dt;
    if (st.positions.size() <= 1) {
      for (std::size_t k = 0; k < st.positions.size(); ++k)
        st.positions[k] += remaining * st.speeds[k];
      st.time += remaining;
      remaining = 0.0;
    }
  }
  return st.to_step_function();
}

double tv(const StepFunction& u) { return u.tv(); }

}  // namespace wass1d
