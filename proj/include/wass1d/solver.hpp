#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wass1d/flux.hpp"
#include "wass1d/grid.hpp"
#include "wass1d/kernels.hpp"

namespace wass1d {

enum class SchemeOrder { Monotone1, Eno2, Eno3 };

SchemeOrder order_from_name(const std::string& name);  // "1", "eno2", "eno3"
const char* order_name(SchemeOrder o);

/// Point source h(x, t) sampled at cell centers at the step's start time.
using CellSource = std::function<double(double x, double t)>;

struct SchemeConfig {
  NumericalFlux nf;
  SchemeOrder order = SchemeOrder::Monotone1;
  double cfl_number = 0.3;
  CellSource source;  // empty = homogeneous
  kernels::Backend backend = kernels::Backend::openmp;
};

/// One forward-Euler step of the 3-point conservative scheme
/// u_i <- u_i - lambda (F(u_i, u_{i+1}) - F(u_{i-1}, u_i)) + dt h_i.
/// Ghost values come from the far states; far states are unchanged.
GridFunction step_monotone(const GridFunction& u, const SchemeConfig& cfg, double dt,
                           double t_now = 0.0);

/// One SSP-RK3 step with Godunov flux on ENO face states.
GridFunction step_eno_rk3(const GridFunction& u, const SchemeConfig& cfg, double dt,
                          double t_now = 0.0);

/// ENO face values at every interface j = 0..n: minus[j] from the cell left
/// of the interface, plus[j] from the cell right of it.
struct EnoInterfaceStates {
  std::vector<double> minus;
  std::vector<double> plus;
};

EnoInterfaceStates eno_reconstruct(const GridFunction& u, int order,
                                   kernels::Backend backend = kernels::Backend::serial);

struct RunResult {
  GridFunction u;
  std::size_t steps;
  double dt;           // nominal step (the last step may be shorter)
  double edge_defect;  // max deviation of the outermost cells from the far states
};

/// Advance to t_final with the uniform CFL step, shortening the final step to
/// land exactly on t_final.
RunResult run(const GridFunction& u0, const SchemeConfig& cfg, double t_final);

}  // namespace wass1d
