#include "wass1d/grid.hpp"

#include <algorithm>
#include <cmath>

#include "wass1d/errors.hpp"

namespace wass1d {

Grid::Grid(double x_left_, double dx_, std::size_t n_cells_)
    : x_left(x_left_), dx(dx_), n_cells(n_cells_) {
  if (!(dx > 0.0) || !std::isfinite(dx)) fail(Errc::InvalidConfig, "dx must be positive");
  if (n_cells < 2) fail(Errc::InvalidConfig, "need at least two cells");
  if (!std::isfinite(x_left)) fail(Errc::InvalidConfig, "x_left must be finite");
}

GridFunction::GridFunction(Grid grid, std::vector<double> values, double far_left,
                           double far_right)
    : grid_(grid), values_(std::move(values)), far_left_(far_left), far_right_(far_right) {
  if (values_.size() != grid_.n_cells)
    fail(Errc::InvalidConfig, "value count must equal n_cells");
  for (double v : values_)
    if (!std::isfinite(v)) fail(Errc::InvalidConfig, "cell values must be finite");
  if (!std::isfinite(far_left_) || !std::isfinite(far_right_))
    fail(Errc::InvalidConfig, "far states must be finite");
}

StepFunction GridFunction::to_step_function() const {
  std::vector<double> xs;
  std::vector<double> vals;
  xs.reserve(grid_.n_cells + 1);
  vals.reserve(grid_.n_cells + 2);
  vals.push_back(far_left_);
  for (std::size_t i = 0; i < grid_.n_cells; ++i) {
    xs.push_back(grid_.boundary(i));
    vals.push_back(values_[i]);
  }
  xs.push_back(grid_.x_right());
  vals.push_back(far_right_);
  return StepFunction(std::move(xs), std::move(vals));
}

double GridFunction::min_value() const {
  double m = std::min(far_left_, far_right_);
  for (double v : values_) m = std::min(m, v);
  return m;
}

double GridFunction::max_value() const {
  double m = std::max(far_left_, far_right_);
  for (double v : values_) m = std::max(m, v);
  return m;
}

GridFunction project(const StepFunction& u, const Grid& grid) {
  for (double x : u.breakpoints())
    if (x < grid.x_left || x > grid.x_right())
      fail(Errc::ExteriorJump, "jump outside the grid span");
  std::vector<double> vals(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i)
    vals[i] = u.integrate(grid.boundary(i), grid.boundary(i + 1)) / grid.dx;
  return GridFunction(grid, std::move(vals), u.far_left(), u.far_right());
}

bool is_decreasing(const GridFunction& v, double tol) {
  double prev = v.far_left();
  for (double x : v.values()) {
    if (!(prev >= x - tol)) return false;
    prev = x;
  }
  return prev >= v.far_right() - tol;
}

double total_mass_difference(const GridFunction& u, const GridFunction& v) {
  if (!(u.grid() == v.grid())) fail(Errc::IncompatibleFunctions, "grids differ");
  if (u.far_left() != v.far_left() || u.far_right() != v.far_right())
    fail(Errc::IncompatibleFunctions, "far states differ");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] - v[i];
  return u.grid().dx * s;
}

}  // namespace wass1d
