#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wass1d/grid.hpp"

namespace wass1d {

/// Convex physical flux f with derivative f'. If the minimizer of f is known
/// it should be registered: Engquist-Osher and Godunov evaluations are then
/// closed-form instead of iterative. slope_avg, when set, must return
/// (f(q) - f(p)) / (q - p) in a cancellation-free form (and f'(p) for p = q);
/// it keeps the dual-coefficient chains clean where p and q nearly coincide.
struct ConvexFlux {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  std::string name;
  std::optional<double> minimizer;
  std::function<double(double, double)> slope_avg;

  double operator()(double u) const { return f(u); }
};

/// f(u) = u^2/2, minimizer at 0.
ConvexFlux burgers_flux();

enum class Scheme { LaxFriedrichs, EngquistOsher, Godunov };

Scheme scheme_from_name(const std::string& name);  // "lxf", "eo", "godunov"
const char* scheme_name(Scheme s);

/// Two-point numerical flux F(a, b). Lax-Friedrichs requires the mesh ratio
/// lambda = dt/dx; the other schemes ignore it.
struct NumericalFlux {
  Scheme scheme = Scheme::Godunov;
  ConvexFlux flux;
  std::optional<double> lambda;

  NumericalFlux with_lambda(double lam) const {
    NumericalFlux nf = *this;
    nf.lambda = lam;
    return nf;
  }

  double operator()(double a, double b) const;
};

double numerical_flux(const NumericalFlux& nf, double a, double b);

/// Largest |f'| over the state box [u_min, u_max] (attained at a box end for
/// convex f).
double max_wave_speed(const ConvexFlux& flux, double u_min, double u_max);

/// dt = cfl_number * dx / max|f'| over the box.
double cfl_timestep(const NumericalFlux& nf, const Grid& grid, double u_min, double u_max,
                    double cfl_number);

/// Path-averaged flux partials along the segment joining (v_i, v_{i+1}) to
/// (u_i, u_{i+1}): A[i] averages dF/da over the cell-i path, B[i] averages
/// dF/db over the cell-i path seen from the interface (i-1, i). The exact
/// two-term expansion F(u_i, u_{i+1}) - F(v_i, v_{i+1}) =
/// A[i] (u_i - v_i) + B[i+1] (u_{i+1} - v_{i+1}) holds up to rounding.
struct LinearizationCoefficients {
  std::vector<double> A;
  std::vector<double> B;
};

LinearizationCoefficients linearization_coefficients(const NumericalFlux& nf,
                                                     const GridFunction& u,
                                                     const GridFunction& v);

/// Backward-dual admissibility: A nonnegative and non-increasing, B
/// nonpositive and non-increasing, and lambda * (A_i - B_i) <= 1 cellwise.
struct ContractivityReport {
  bool ok = true;
  std::size_t index = 0;
  std::string violated;  // empty when ok
};

ContractivityReport check_contractivity_conditions(const std::vector<double>& A,
                                                   const std::vector<double>& B, double lambda,
                                                   double slack = 1e-12);

// Sampled checks used by tests and input validation.
bool is_convex_sampled(const ConvexFlux& flux, double lo, double hi, std::size_t n = 512);
double consistency_defect(const NumericalFlux& nf, double lo, double hi, std::size_t n = 256);
bool is_monotone_sampled(const NumericalFlux& nf, double lo, double hi, std::size_t n = 64);

}  // namespace wass1d
