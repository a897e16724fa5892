#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wass1d/flux.hpp"
#include "wass1d/grid.hpp"

namespace wass1d {

/// Lattice samples of a discrete shock profile: a grid state the scheme maps
/// onto a translate of itself, D*lambda cells per step.
struct DiscreteShockProfile {
  int min_offset = 0;           // offset of samples.front()
  std::vector<double> samples;  // values at integer offsets
  double u_left = 0.0;
  double u_right = 0.0;
  double speed = 0.0;   // Rankine-Hugoniot D
  double lambda = 0.0;  // dt/dx
  NumericalFlux nf;
  double residual = 0.0;  // achieved q-step translation defect
  int shift_cells = 0;    // profile moves shift_cells cells every shift_steps steps
  int shift_steps = 1;
  bool approximate_ratio = false;  // D*lambda was not resolved as an exact rational

  int max_offset() const { return min_offset + static_cast<int>(samples.size()) - 1; }

  /// Linear interpolation between lattice samples; end states outside.
  double value(double xi) const;
};

/// Long-time evolution of projected Riemann data in a co-moving window. For
/// rational D*lambda = p/q the window shifts p cells every q steps and the
/// iteration stops when the q-step translation defect drops below tol.
DiscreteShockProfile compute_profile(const NumericalFlux& nf, double u_left, double u_right,
                                     double lambda, std::size_t window, double tol = 1e-10,
                                     std::size_t step_cap = 1000000);

/// Traveling-wave defect max_xi |U(xi - D*lambda) - U(xi) +
/// lambda (F(U(xi), U(xi+1)) - F(U(xi-1), U(xi)))| over the stored window,
/// the shifted argument read off the lattice by interpolation.
double profile_residual(const DiscreteShockProfile& p);

/// Sample the profile onto the grid relative to the shock location, then
/// shift the sampling offset so the sampled wave carries exactly the mass of
/// the sharp jump at x_shock.
GridFunction normalize_mass(const DiscreteShockProfile& p, double x_shock, const Grid& grid);

struct DecayFit {
  double alpha;        // weaker (smaller) rate across the two tails
  double beta;         // larger amplitude
  double correlation;  // worse |r| of the fitted tails
};

/// Least-squares exponential fit of the profile tails (offsets |xi| >= 2,
/// deviations above the noise floor). Throws TailTooSharp when no tail has
/// enough samples, e.g. for exact Heaviside profiles.
DecayFit fit_decay(const DiscreteShockProfile& p, double noise_floor = 1e-13);

/// W1 distance between the sharp jump and the mass-normalized sampling of the
/// profile at cell width dx, the jump placed on a cell boundary.
double w1_heaviside_gap(const DiscreteShockProfile& p, double dx);

/// Two-column (offset, value) text block for plotting.
std::string profile_to_text(const DiscreteShockProfile& p);

}  // namespace wass1d
