#include "wass1d/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wass1d/errors.hpp"
#include "wass1d/metrics.hpp"

namespace wass1d {

DualTrajectory backward_solve(const GridFunction& phi_final, const DualCoefficients& coeffs) {
  const std::size_t n = phi_final.size();
  const std::size_t n_steps = coeffs.A.size();
  if (coeffs.B.size() != n_steps)
    fail(Errc::IncompatibleCoefficients, "A and B must span the same number of steps");
  for (std::size_t m = 0; m < n_steps; ++m)
    if (coeffs.A[m].size() != n || coeffs.B[m].size() != n)
      fail(Errc::IncompatibleCoefficients, "coefficient slices must match the grid");

  DualTrajectory out;
  out.phi.assign(n_steps + 1, phi_final);
  out.dlip_history.assign(n_steps + 1, 0.0);
  out.dlip_history[n_steps] = dlip_norm(phi_final);

  std::vector<double> cur = phi_final.values();
  std::vector<double> next(n);
  for (std::size_t m = n_steps; m-- > 0;) {
    const auto& A = coeffs.A[m];
    const auto& B = coeffs.B[m];
    for (std::size_t i = 0; i < n; ++i) {
      const double up = (i + 1 < n) ? cur[i + 1] : cur[n - 1];  // constant extension
      const double dn = (i > 0) ? cur[i - 1] : cur[0];
      next[i] = cur[i] + coeffs.lambda * (A[i] * (up - cur[i]) + B[i] * (cur[i] - dn));
    }
    std::swap(cur, next);
    GridFunction phi(phi_final.grid(), cur, cur.front(), cur.back());
    out.dlip_history[m] = dlip_norm(phi);
    out.phi[m] = std::move(phi);
  }
  return out;
}

namespace {

double tv_of_difference(const StepFunction& u, const StepFunction& v) {
  std::vector<double> xs;
  std::merge(u.breakpoints().begin(), u.breakpoints().end(), v.breakpoints().begin(),
             v.breakpoints().end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double tv = 0.0;
  double prev = u.far_left() - v.far_left();
  for (double x : xs) {
    const double d = u.value_at(x) - v.value_at(x);
    tv += std::abs(d - prev);
    prev = d;
  }
  return tv;
}

std::vector<double> sample_source_diff(const CellSource& h, const CellSource& g,
                                       const Grid& grid, double t, double dt) {
  std::vector<double> s(grid.n_cells, 0.0);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    const double x = grid.center(i);
    const double hv = h ? h(x, t) : 0.0;
    const double gv = g ? g(x, t) : 0.0;
    s[i] = dt * (hv - gv);
  }
  return s;
}

}  // namespace

ContractivityExperiment contractivity_experiment(const StepFunction& u0, const StepFunction& v0,
                                                 const CellSource& h, const CellSource& g,
                                                 const NumericalFlux& nf, const Grid& grid,
                                                 std::size_t n_steps, double cfl_number) {
  if (!u0.is_decreasing() || !v0.is_decreasing())
    fail(Errc::NotDecreasing, "experiment requires decreasing initial data");
  if (u0.far_left() != v0.far_left() || u0.far_right() != v0.far_right())
    fail(Errc::FarStateMismatch, "paired data must share far states");

  const double u_min = std::min(u0.min_value(), v0.min_value());
  const double u_max = std::max(u0.max_value(), v0.max_value());
  const double dt = cfl_timestep(nf, grid, u_min, u_max, cfl_number);
  const double lambda = dt / grid.dx;

  ContractivityExperiment exp;
  exp.dt = dt;
  exp.lambda = lambda;
  exp.decreasing_preserved = true;

  GridFunction u = project(u0, grid);
  GridFunction v = project(v0, grid);
  exp.u_traj.push_back(u);
  exp.v_traj.push_back(v);

  const double span = grid.x_right() - grid.x_left;
  const double speed = max_wave_speed(nf.flux, u_min, u_max);
  exp.scale = std::max(tv_of_difference(u0, v0) * span * speed, 1e-30);

  const double w1d_initial = w1_discrete(u, v);
  double accumulated_source = 0.0;
  exp.max_violation = -std::numeric_limits<double>::infinity();

  SchemeConfig cfg_u{nf, SchemeOrder::Monotone1, cfl_number, h, kernels::Backend::openmp};
  SchemeConfig cfg_v{nf, SchemeOrder::Monotone1, cfl_number, g, kernels::Backend::openmp};

  for (std::size_t m = 0; m < n_steps; ++m) {
    const double t_now = static_cast<double>(m) * dt;
    const std::vector<double> sdiff = sample_source_diff(h, g, grid, t_now, dt);
    double sum = 0.0;
    for (double x : sdiff) sum += x;
    if (std::abs(sum) * grid.dx > 1e-10 * std::max(exp.scale, 1.0) * dt)
      fail(Errc::MassMismatch, "per-step source difference must have zero cell sum");
    exp.source_diff_dt.push_back(sdiff);

    // W1D(h^n, g^n): represent the difference as a grid function with zero
    // far states.
    std::vector<double> hd(sdiff);
    for (double& x : hd) x /= dt;
    const GridFunction hdiff(grid, hd, 0.0, 0.0);
    const GridFunction zero(grid, std::vector<double>(grid.n_cells, 0.0), 0.0, 0.0);
    const double w1d_src = w1_discrete(hdiff, zero);

    u = step_monotone(u, cfg_u, dt, t_now);
    v = step_monotone(v, cfg_v, dt, t_now);
    exp.u_traj.push_back(u);
    exp.v_traj.push_back(v);
    const double dec_tol = 1e-9 * (1.0 + std::abs(u_max) + std::abs(u_min));
    if (!is_decreasing(u, dec_tol) || !is_decreasing(v, dec_tol))
      exp.decreasing_preserved = false;

    accumulated_source += dt * w1d_src;
    ContractivityStep rec;
    rec.w1d_source = w1d_src;
    rec.lhs = w1(u, v);
    rec.rhs = w1d_initial + accumulated_source;
    exp.steps.push_back(rec);
    exp.max_violation = std::max(exp.max_violation, rec.lhs - rec.rhs);
  }
  return exp;
}

std::string ContractivityExperiment::to_csv() const {
  std::ostringstream os;
  os << "step,lhs,rhs,slack,w1d_source\n";
  os.precision(12);
  for (std::size_t n = 0; n < steps.size(); ++n)
    os << n + 1 << "," << steps[n].lhs << "," << steps[n].rhs << ","
       << steps[n].rhs - steps[n].lhs << "," << steps[n].w1d_source << "\n";
  return os.str();
}

DualCoefficients trajectory_coefficients(const NumericalFlux& nf,
                                         const std::vector<GridFunction>& u_traj,
                                         const std::vector<GridFunction>& v_traj,
                                         double lambda) {
  if (u_traj.size() != v_traj.size() || u_traj.empty())
    fail(Errc::IncompatibleCoefficients, "trajectories must pair up");
  DualCoefficients coeffs;
  coeffs.lambda = lambda;
  const NumericalFlux nfl = nf.with_lambda(lambda);
  for (std::size_t m = 0; m + 1 < u_traj.size(); ++m) {
    LinearizationCoefficients lc = linearization_coefficients(nfl, u_traj[m], v_traj[m]);
    coeffs.A.push_back(std::move(lc.A));
    coeffs.B.push_back(std::move(lc.B));
  }
  return coeffs;
}

CoefficientConditionsReport verify_coefficient_conditions(
    const NumericalFlux& nf, const std::vector<GridFunction>& u_traj,
    const std::vector<GridFunction>& v_traj, double lambda) {
  CoefficientConditionsReport rep;
  const DualCoefficients coeffs = trajectory_coefficients(nf, u_traj, v_traj, lambda);
  for (std::size_t m = 0; m < coeffs.A.size(); ++m) {
    const ContractivityReport r = check_contractivity_conditions(coeffs.A[m], coeffs.B[m], lambda);
    if (!r.ok) {
      rep.ok = false;
      rep.step = m;
      rep.failure = r;
      return rep;
    }
  }
  return rep;
}

double duality_bookkeeping_defect(const NumericalFlux& nf, const ContractivityExperiment& exp,
                                  const GridFunction& phi_final) {
  const DualCoefficients coeffs =
      trajectory_coefficients(nf, exp.u_traj, exp.v_traj, exp.lambda);
  const DualTrajectory traj = backward_solve(phi_final, coeffs);
  const double dx = phi_final.grid().dx;

  auto weighted = [&](std::size_t n) {
    const GridFunction& phi = traj.phi[n];
    const GridFunction& u = exp.u_traj[n];
    const GridFunction& v = exp.v_traj[n];
    double s = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * (u[i] - v[i]);
    return dx * s;
  };

  double worst = 0.0;
  for (std::size_t n = 0; n + 1 < exp.u_traj.size(); ++n) {
    double src = 0.0;
    const GridFunction& phi_next = traj.phi[n + 1];
    for (std::size_t i = 0; i < phi_next.size(); ++i)
      src += phi_next[i] * exp.source_diff_dt[n][i];
    const double lhs = weighted(n + 1);
    const double rhs = weighted(n) + dx * src;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace wass1d
