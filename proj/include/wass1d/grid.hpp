#pragma once

#include <cstddef>
#include <vector>

#include "wass1d/step_function.hpp"

namespace wass1d {

/// Uniform 1-D grid. Cell i spans [x_left + i*dx, x_left + (i+1)*dx).
struct Grid {
  Grid(double x_left, double dx, std::size_t n_cells);

  double x_left;
  double dx;
  std::size_t n_cells;

  double x_right() const { return x_left + dx * static_cast<double>(n_cells); }
  double center(std::size_t i) const { return x_left + (static_cast<double>(i) + 0.5) * dx; }
  double boundary(std::size_t i) const { return x_left + static_cast<double>(i) * dx; }

  bool operator==(const Grid& other) const = default;
};

/// Cell-average values on a uniform grid, with constant far states giving the
/// whole-line function a finite representation.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values, double far_left, double far_right);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double far_left() const { return far_left_; }
  double far_right() const { return far_right_; }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Value at cell i, with i allowed outside [0, n): far states.
  double value_or_far(long long i) const {
    if (i < 0) return far_left_;
    if (i >= static_cast<long long>(values_.size())) return far_right_;
    return values_[static_cast<std::size_t>(i)];
  }

  /// Exact conversion to a step function with jumps on cell boundaries.
  StepFunction to_step_function() const;

  double min_value() const;
  double max_value() const;

  GridFunction with_values(std::vector<double> values) const {
    return GridFunction(grid_, std::move(values), far_left_, far_right_);
  }

 private:
  Grid grid_;
  std::vector<double> values_;
  double far_left_;
  double far_right_;
};

/// Exact cell averages of a step function (length-weighted plateau sums).
/// Far states are copied from the extreme plateau values; any jump strictly
/// outside the grid span is refused.
GridFunction project(const StepFunction& u, const Grid& grid);

/// far_left >= values[0] >= ... >= values[n-1] >= far_right. The tolerance
/// absorbs rounding noise of evolved data; the default is exact.
bool is_decreasing(const GridFunction& v, double tol = 0.0);

/// dx * sum_i (u_i - v_i); requires a shared grid and equal far states.
double total_mass_difference(const GridFunction& u, const GridFunction& v);

}  // namespace wass1d
