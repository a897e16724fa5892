#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wass1d/flux.hpp"
#include "wass1d/grid.hpp"
#include "wass1d/solver.hpp"
#include "wass1d/step_function.hpp"

namespace wass1d {

/// Per-step linearization coefficients driving the backward dual problem.
struct DualCoefficients {
  std::vector<std::vector<double>> A;  // [step][cell]
  std::vector<std::vector<double>> B;
  double lambda = 0.0;
};

struct DualTrajectory {
  std::vector<GridFunction> phi;     // phi[n] for n = 0..N
  std::vector<double> dlip_history;  // DLip norm of phi[n]
};

/// Solve phi^n = phi^{n+1} + lambda (A_i^n (phi_{i+1} - phi_i) +
/// B_i^n (phi_i - phi_{i-1})) backward from phi^N, boundary values extended
/// constantly.
DualTrajectory backward_solve(const GridFunction& phi_final, const DualCoefficients& coeffs);

struct ContractivityStep {
  double lhs;         // W1(u^n, v^n)
  double rhs;         // W1D(u^0, v^0) + dt * accumulated W1D(h, g)
  double w1d_source;  // W1D(h^n, g^n) of this step
};

struct ContractivityExperiment {
  std::vector<ContractivityStep> steps;  // n = 1..N
  double max_violation;                  // max over n of lhs - rhs
  double scale;                          // TV(u0 - v0) * span * max|f'|
  bool decreasing_preserved;             // both trajectories stayed decreasing
  std::vector<GridFunction> u_traj, v_traj;
  std::vector<std::vector<double>> source_diff_dt;  // dt * (h - g) samples per step
  double dt;
  double lambda;
  std::string to_csv() const;  // per-step lhs, rhs, slack block
};

/// Run the paired inhomogeneous schemes and evaluate the transport-stability
/// inequality at every step. The per-step source difference h - g must sum to
/// zero over the cells.
ContractivityExperiment contractivity_experiment(const StepFunction& u0, const StepFunction& v0,
                                                 const CellSource& h, const CellSource& g,
                                                 const NumericalFlux& nf, const Grid& grid,
                                                 std::size_t n_steps, double cfl_number = 0.3);

struct CoefficientConditionsReport {
  bool ok = true;
  std::size_t step = 0;
  ContractivityReport failure;  // first failing slice when !ok
};

/// Build the linearization of each step of a trajectory pair and run the
/// admissibility chains on every slice.
CoefficientConditionsReport verify_coefficient_conditions(
    const NumericalFlux& nf, const std::vector<GridFunction>& u_traj,
    const std::vector<GridFunction>& v_traj, double lambda);

/// Coefficients of every step of a trajectory pair.
DualCoefficients trajectory_coefficients(const NumericalFlux& nf,
                                         const std::vector<GridFunction>& u_traj,
                                         const std::vector<GridFunction>& v_traj, double lambda);

/// Max defect over steps of the weighted-sum bookkeeping
/// sum_i phi^{n+1} (u^{n+1} - v^{n+1}) dx =
/// sum_i phi^n (u^n - v^n) dx + sum_i phi^{n+1} (h^n - g^n) dx dt
/// for phi generated by backward_solve from the pair's own coefficients.
double duality_bookkeeping_defect(const NumericalFlux& nf, const ContractivityExperiment& exp,
                                  const GridFunction& phi_final);

}  // namespace wass1d
