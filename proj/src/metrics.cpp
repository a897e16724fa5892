#include "wass1d/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "wass1d/errors.hpp"

namespace wass1d {

namespace {

std::vector<double> merged_breakpoints(const StepFunction& u, const StepFunction& v) {
  std::vector<double> xs;
  xs.reserve(u.breakpoints().size() + v.breakpoints().size());
  std::merge(u.breakpoints().begin(), u.breakpoints().end(), v.breakpoints().begin(),
             v.breakpoints().end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void require_far_states(const StepFunction& u, const StepFunction& v) {
  if (u.far_left() != v.far_left() || u.far_right() != v.far_right())
    fail(Errc::FarStateMismatch, "far states differ");
}

double hull_span(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : xs.back() - xs.front();
}

}  // namespace

double PiecewiseLinear::eval(double x) const {
  if (xs.empty()) return 0.0;
  if (x <= xs.front()) return nodes.front();
  if (x >= xs.back()) return nodes.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
  return (1.0 - t) * nodes[k - 1] + t * nodes[k];
}

double PiecewiseLinear::integral_abs() const {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double h = xs[k + 1] - xs[k];
    const double p = nodes[k];
    const double q = nodes[k + 1];
    if (p * q >= 0.0)
      total += 0.5 * h * (std::abs(p) + std::abs(q));
    else
      total += 0.5 * h * (p * p + q * q) / std::abs(p - q);
  }
  return total;
}

PiecewiseLinear primitive_of_difference(const StepFunction& u, const StepFunction& v) {
  require_far_states(u, v);
  PiecewiseLinear prim;
  prim.xs = merged_breakpoints(u, v);
  if (prim.xs.empty()) {
    prim.xs = {0.0};
    prim.nodes = {0.0};
    return prim;
  }
  prim.nodes.resize(prim.xs.size());
  prim.nodes[0] = 0.0;  // equal far states: the difference vanishes to the left
  for (std::size_t k = 0; k + 1 < prim.xs.size(); ++k) {
    const double x = prim.xs[k];
    const double d = u.value_at(x) - v.value_at(x);
    prim.nodes[k + 1] = prim.nodes[k] + d * (prim.xs[k + 1] - prim.xs[k]);
  }
  return prim;
}

W1Result w1_detailed(const StepFunction& u, const StepFunction& v) {
  PiecewiseLinear prim = primitive_of_difference(u, v);
  const double mass = prim.nodes.back();
  const double span = hull_span(prim.xs);
  const double scale = std::max(u.tv() + v.tv(), 1e-30) * std::max(span, 1e-30);
  if (std::abs(mass) > 1e-10 * scale)
    fail(Errc::MassMismatch, "net mass of u - v is not zero");
  return {prim.integral_abs(), mass};
}

double w1(const StepFunction& u, const StepFunction& v) { return w1_detailed(u, v).value; }
double w1(const GridFunction& u, const GridFunction& v) {
  return w1(u.to_step_function(), v.to_step_function());
}
double w1(const StepFunction& u, const GridFunction& v) { return w1(u, v.to_step_function()); }
double w1(const GridFunction& u, const StepFunction& v) { return w1(u.to_step_function(), v); }

double w1_discrete(const GridFunction& u, const GridFunction& v) {
  if (!(u.grid() == v.grid())) fail(Errc::IncompatibleFunctions, "grids differ");
  if (u.far_left() != v.far_left() || u.far_right() != v.far_right())
    fail(Errc::IncompatibleFunctions, "far states differ");
  const double dx = u.grid().dx;
  double prefix = 0.0;
  double total_abs = 0.0;
  double tv = 0.0;
  double prev_u = u.far_left();
  double prev_v = v.far_left();
  for (std::size_t i = 0; i < u.size(); ++i) {
    // |prefix| after cell i equals |sum_{j<i+1}|; exterior prefixes vanish.
    prefix += u[i] - v[i];
    tv += std::abs(u[i] - prev_u) + std::abs(v[i] - prev_v);
    prev_u = u[i];
    prev_v = v[i];
    if (i + 1 < u.size()) total_abs += std::abs(prefix);
  }
  const double span = dx * static_cast<double>(u.size());
  if (std::abs(prefix) * dx > 1e-10 * std::max(tv, 1.0) * std::max(span, 1.0))
    fail(Errc::MassMismatch, "cell sums of u and v differ");
  return dx * dx * total_abs;
}

double l1_distance(const StepFunction& u, const StepFunction& v) {
  require_far_states(u, v);
  const auto xs = merged_breakpoints(u, v);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k)
    total += std::abs(u.value_at(xs[k]) - v.value_at(xs[k])) * (xs[k + 1] - xs[k]);
  return total;
}
double l1_distance(const GridFunction& u, const GridFunction& v) {
  return l1_distance(u.to_step_function(), v.to_step_function());
}
double l1_distance(const StepFunction& u, const GridFunction& v) {
  return l1_distance(u, v.to_step_function());
}
double l1_distance(const GridFunction& u, const StepFunction& v) {
  return l1_distance(u.to_step_function(), v);
}

double dlip_norm(const GridFunction& phi) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < phi.size(); ++i)
    worst = std::max(worst, std::abs(phi[i + 1] - phi[i]));
  return worst / phi.grid().dx;
}

}  // namespace wass1d
