#include "wass1d/discrete_shock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wass1d/errors.hpp"
#include "wass1d/front_tracker.hpp"
#include "wass1d/metrics.hpp"
#include "wass1d/step_function.hpp"

namespace wass1d {

namespace {

// Best rational p/q for x by continued fractions. Returns true when the
// approximation is exact to tol.
bool rationalize(double x, int q_max, double tol, int& p_out, int& q_out) {
  long long p0 = 1, q0 = 0;
  long long p1 = static_cast<long long>(std::floor(x));
  long long q1 = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) break;
    if (frac == 0.0) break;
    const double inv = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > q_max) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  p_out = static_cast<int>(p1);
  q_out = static_cast<int>(q1);
  return std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol;
}

struct LeastSquaresLine {
  double slope;
  double intercept;
  double correlation;
};

LeastSquaresLine fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    syy += ys[k] * ys[k];
    sxy += xs[k] * ys[k];
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  const double var = (n * sxx - sx * sx) * (n * syy - sy * sy);
  const double corr = var > 0.0 ? (n * sxy - sx * sy) / std::sqrt(var) : 0.0;
  return {slope, intercept, corr};
}

}  // namespace

double DiscreteShockProfile::value(double xi) const {
  const double lo = static_cast<double>(min_offset);
  const double hi = static_cast<double>(max_offset());
  if (xi <= lo) return samples.front();
  if (xi >= hi) return samples.back();
  const double rel = xi - lo;
  const auto k = static_cast<std::size_t>(std::floor(rel));
  const double t = rel - std::floor(rel);
  if (k + 1 >= samples.size()) return samples.back();
  return (1.0 - t) * samples[k] + t * samples[k + 1];
}

DiscreteShockProfile compute_profile(const NumericalFlux& nf, double u_left, double u_right,
                                     double lambda, std::size_t window, double tol,
                                     std::size_t step_cap) {
  if (!(u_left > u_right)) fail(Errc::NotAShock, "profile needs u_left > u_right");
  if (window < 40) fail(Errc::InsufficientWindow, "window must be at least 40 cells per side");

  const double speed = shock_speed(u_left, u_right, nf.flux);
  const double ratio = speed * lambda;  // cells of drift per step
  int p = 0, q = 1;
  const bool exact = rationalize(ratio, 4096, 1e-12 * std::max(1.0, std::abs(ratio)), p, q);

  DiscreteShockProfile prof;
  prof.min_offset = -static_cast<int>(window);
  prof.u_left = u_left;
  prof.u_right = u_right;
  prof.speed = speed;
  prof.lambda = lambda;
  prof.nf = nf.with_lambda(lambda);
  prof.shift_cells = p;
  prof.shift_steps = q;
  prof.approximate_ratio = !exact;

  const std::size_t len = 2 * window + 1;
  std::vector<double> u(len), next(len);
  for (std::size_t k = 0; k < len; ++k)
    u[k] = (static_cast<int>(k) + prof.min_offset < 0) ? u_left : u_right;

  const NumericalFlux nfl = nf.with_lambda(lambda);
  auto at = [&](const std::vector<double>& w, long long k) {
    if (k < 0) return u_left;
    if (k >= static_cast<long long>(len)) return u_right;
    return w[static_cast<std::size_t>(k)];
  };

  // One co-moving period: q scheme steps with p cells of window re-centering
  // spread over them.
  auto period = [&](std::vector<double> w) {
    long long shifted = 0;
    for (int step = 1; step <= q; ++step) {
      for (std::size_t k = 0; k < len; ++k) {
        const long long i = static_cast<long long>(k);
        const double f_right = nfl(at(w, i), at(w, i + 1));
        const double f_left = nfl(at(w, i - 1), at(w, i));
        next[k] = w[k] - lambda * (f_right - f_left);
      }
      std::swap(w, next);
      const long long target = static_cast<long long>(
          std::floor(static_cast<double>(step) * p / static_cast<double>(q) + 0.5));
      const long long shift = target - shifted;
      shifted = target;
      if (shift > 0) {
        std::rotate(w.begin(), w.begin() + shift, w.end());
        std::fill(w.end() - shift, w.end(), u_right);
      } else if (shift < 0) {
        std::rotate(w.begin(), w.end() + shift, w.end());
        std::fill(w.begin(), w.begin() - shift, u_left);
      }
    }
    return w;
  };

  // Damped fixed-point iteration on the period map: the plain map is only
  // neutrally stable for schemes with a checkerboard mode (Lax-Friedrichs),
  // while averaging with the identity leaves the fixed points in place and
  // makes them attract.
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t steps_taken = 0; steps_taken < step_cap; steps_taken += q) {
    const std::vector<double> mapped = period(u);
    residual = 0.0;
    for (std::size_t k = 0; k < len; ++k)
      residual = std::max(residual, std::abs(mapped[k] - u[k]));
    if (residual <= tol) {
      u = mapped;
      break;
    }
    for (std::size_t k = 0; k < len; ++k) u[k] = 0.5 * (u[k] + mapped[k]);
  }
  if (residual > tol)
    fail(Errc::NoConvergence, "profile iteration hit the step cap with residual " +
                                  std::to_string(residual));
  prof.samples = u;
  prof.residual = residual;
  return prof;
}

double profile_residual(const DiscreteShockProfile& p) {
  const double drift = p.speed * p.lambda;
  const int lo = p.min_offset + 1 + static_cast<int>(std::ceil(std::abs(drift)));
  const int hi = p.max_offset() - 1 - static_cast<int>(std::ceil(std::abs(drift)));
  if (hi - lo < 5) fail(Errc::InsufficientWindow, "window too small for the shifted stencil");
  const NumericalFlux& nfl = p.nf;
  if (!nfl.flux.f) fail(Errc::InvalidConfig, "profile carries no physical flux");
  double worst = 0.0;
  for (int xi = lo; xi <= hi; ++xi) {
    const double lhs = p.value(static_cast<double>(xi) - drift);
    const double rhs = p.value(xi) -
                       p.lambda * (nfl(p.value(xi), p.value(xi + 1)) -
                                   nfl(p.value(xi - 1), p.value(xi)));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

GridFunction normalize_mass(const DiscreteShockProfile& p, double x_shock, const Grid& grid) {
  if (x_shock <= grid.x_left || x_shock >= grid.x_right())
    fail(Errc::WindowTooSmall, "shock location must lie inside the grid");
  const double jump = p.u_left - p.u_right;
  const StepFunction sharp = StepFunction::heaviside(p.u_left, p.u_right, x_shock);

  auto sample = [&](double zeta) {
    std::vector<double> vals(grid.n_cells);
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
      const double offset = (grid.center(i) - x_shock) / grid.dx;
      vals[i] = p.value(offset + zeta);
    }
    return GridFunction(grid, std::move(vals), p.u_left, p.u_right);
  };

  auto defect = [&](const GridFunction& v) {
    double mass_v = 0.0;
    for (double x : v.values()) mass_v += x;
    return sharp.integrate(grid.x_left, grid.x_right()) - grid.dx * mass_v;
  };

  // Shifting the sampling argument by zeta changes the sampled mass by
  // -zeta * dx * jump, so the zero-mass shift is one Newton step; iterate to
  // absorb window-truncation crumbs.
  double zeta = 0.0;
  GridFunction v = sample(zeta);
  const double scale =
      std::max(jump * (grid.x_right() - grid.x_left), 1e-30);
  for (int pass = 0; pass < 8; ++pass) {
    const double d = defect(v);
    if (std::abs(d) <= 1e-13 * scale) break;
    zeta -= d / (grid.dx * jump);
    v = sample(zeta);
  }
  if (std::abs(defect(v)) > 1e-12 * scale)
    fail(Errc::MassMismatch, "mass normalization failed to converge");
  return v;
}

DecayFit fit_decay(const DiscreteShockProfile& p, double noise_floor) {
  DecayFit out{std::numeric_limits<double>::infinity(), 0.0, 1.0};
  bool fitted = false;
  // Standardized fit depth: independent of the stored window (the outermost
  // cells feel the end-state pinning), deep enough for a clean regime.
  const int depth = std::min(38, std::min(-p.min_offset, p.max_offset()) - 2);
  for (int side = 0; side < 2; ++side) {
    std::vector<double> xs, ys;
    for (int xi = -depth; xi <= depth; ++xi) {
      if (side == 0 && xi > -2) continue;
      if (side == 1 && xi < 2) continue;
      const double ref = side == 0 ? p.u_left : p.u_right;
      const double dev = std::abs(p.value(xi) - ref);
      if (dev <= noise_floor) continue;
      xs.push_back(std::abs(static_cast<double>(xi)));
      ys.push_back(std::log(dev));
    }
    if (xs.size() < 4) continue;
    const LeastSquaresLine line = fit_line(xs, ys);
    const double alpha = -line.slope;
    if (!(alpha > 0.0)) continue;
    fitted = true;
    if (alpha < out.alpha) out.alpha = alpha;
    out.beta = std::max(out.beta, std::exp(line.intercept));
    out.correlation = std::min(out.correlation, std::abs(line.correlation));
  }
  if (!fitted)
    fail(Errc::TailTooSharp, "no tail samples above the noise floor (alpha = +inf)");
  return out;
}

double w1_heaviside_gap(const DiscreteShockProfile& p, double dx) {
  const std::size_t half = (p.samples.size() - 1) / 2;
  // Jump on a cell boundary: window [-half*dx, half*dx] with boundary at 0.
  const Grid grid(-static_cast<double>(half) * dx, dx, 2 * half);
  const GridFunction v = normalize_mass(p, 0.0, grid);
  const StepFunction sharp = StepFunction::heaviside(p.u_left, p.u_right, 0.0);
  return w1(sharp, v);
}

std::string profile_to_text(const DiscreteShockProfile& p) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t k = 0; k < p.samples.size(); ++k)
    os << p.min_offset + static_cast<int>(k) << " " << p.samples[k] << "\n";
  return os.str();
}

}  // namespace wass1d
