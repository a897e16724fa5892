#pragma once

#include "wass1d/solver.hpp"

namespace wass1d::ref {

// Plain serial textbook implementations of the time steps, kept as the
// cross-check for the kernel-based production path.

GridFunction step_monotone(const GridFunction& u, const SchemeConfig& cfg, double dt,
                           double t_now = 0.0);

GridFunction step_eno_rk3(const GridFunction& u, const SchemeConfig& cfg, double dt);

}  // namespace wass1d::ref
