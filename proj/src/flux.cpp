#include "wass1d/flux.hpp"

#include <algorithm>
#include <cmath>

#include "wass1d/errors.hpp"

namespace wass1d {

namespace {

// Below this relative gap the generic divided difference cancels
// catastrophically; the midpoint derivative is then the accurate value
// (its error is quadratic in the gap, far under the expansion budget).
constexpr double kPathEps = 1e-8;

double divided_difference(const ConvexFlux& fl, double p, double q) {
  if (fl.slope_avg) return fl.slope_avg(p, q);
  if (std::abs(q - p) <= kPathEps * (1.0 + std::abs(p) + std::abs(q)))
    return fl.f_prime(0.5 * (p + q));
  return (fl.f(q) - fl.f(p)) / (q - p);
}

double adaptive_simpson(const std::function<double(double)>& h, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = h(lm);
  const double frm = h(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(h, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(h, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& h, double a, double b,
                          double tol) {
  if (a == b) return 0.0;
  const double fa = h(a);
  const double fb = h(b);
  const double fm = h(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(h, a, b, fa, fm, fb, whole, tol, 48);
}

// Minimum of a convex function over [lo, hi] by golden-section search.
double convex_min_point(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double godunov_flux(const ConvexFlux& fl, double a, double b) {
  if (a >= b) return std::max(fl.f(a), fl.f(b));
  if (fl.minimizer) return fl.f(std::clamp(*fl.minimizer, a, b));
  return fl.f(convex_min_point(fl.f, a, b));
}

double engquist_osher_flux(const ConvexFlux& fl, double a, double b) {
  if (fl.minimizer) {
    const double w = *fl.minimizer;
    return fl.f(std::max(a, w)) + fl.f(std::min(b, w)) - fl.f(w);
  }
  const double integral = integrate_adaptive([&](double s) { return std::abs(fl.f_prime(s)); },
                                             a, b, 1e-12);
  return 0.5 * (fl.f(a) + fl.f(b)) - 0.5 * integral;
}

}  // namespace

ConvexFlux burgers_flux() {
  ConvexFlux fl;
  fl.f = [](double u) { return 0.5 * u * u; };
  fl.f_prime = [](double u) { return u; };
  fl.name = "burgers";
  fl.minimizer = 0.0;
  fl.slope_avg = [](double p, double q) { return 0.5 * (p + q); };
  return fl;
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "lxf") return Scheme::LaxFriedrichs;
  if (name == "eo") return Scheme::EngquistOsher;
  if (name == "godunov") return Scheme::Godunov;
  fail(Errc::InvalidConfig, "unknown flux scheme '" + name + "' (expected lxf, eo, godunov)");
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::LaxFriedrichs: return "lxf";
    case Scheme::EngquistOsher: return "eo";
    case Scheme::Godunov: return "godunov";
  }
  return "?";
}

double NumericalFlux::operator()(double a, double b) const {
  switch (scheme) {
    case Scheme::LaxFriedrichs: {
      if (!lambda) fail(Errc::MissingLambda, "Lax-Friedrichs flux needs lambda = dt/dx");
      return 0.5 * (flux.f(a) + flux.f(b)) - (b - a) / (2.0 * *lambda);
    }
    case Scheme::EngquistOsher:
      return engquist_osher_flux(flux, a, b);
    case Scheme::Godunov:
      return godunov_flux(flux, a, b);
  }
  fail(Errc::InvalidConfig, "bad scheme");
}

double numerical_flux(const NumericalFlux& nf, double a, double b) { return nf(a, b); }

double max_wave_speed(const ConvexFlux& flux, double u_min, double u_max) {
  return std::max(std::abs(flux.f_prime(u_min)), std::abs(flux.f_prime(u_max)));
}

double cfl_timestep(const NumericalFlux& nf, const Grid& grid, double u_min, double u_max,
                    double cfl_number) {
  if (!(cfl_number > 0.0 && cfl_number <= 1.0))
    fail(Errc::InvalidConfig, "cfl_number must lie in (0, 1]");
  if (!(u_min <= u_max)) fail(Errc::InvalidConfig, "u_min must not exceed u_max");
  const double speed = max_wave_speed(nf.flux, u_min, u_max);
  if (speed <= 0.0)
    fail(Errc::NoWaveSpeed, "flux has no wave speed on the state box; cap dt externally");
  return cfl_number * grid.dx / speed;
}

namespace {

// Locate sign changes of a continuous function on [0,1]: scan then bisect.
std::vector<double> piece_boundaries(const std::function<double(double)>& g) {
  constexpr int kScan = 64;
  std::vector<double> cuts{0.0};
  double s_prev = 0.0;
  double g_prev = g(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double s = static_cast<double>(k) / kScan;
    const double gs = g(s);
    if ((g_prev < 0.0 && gs >= 0.0) || (g_prev >= 0.0 && gs < 0.0)) {
      double lo = s_prev, hi = s;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) >= 0.0) == (g_prev >= 0.0))
          lo = mid;
        else
          hi = mid;
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    s_prev = s;
    g_prev = gs;
  }
  cuts.push_back(1.0);
  return cuts;
}

struct PathPair {
  double va, ua;  // a-argument endpoints (s = 0 and s = 1)
  double vb, ub;  // b-argument endpoints
  double a(double s) const { return (1.0 - s) * va + s * ua; }
  double b(double s) const { return (1.0 - s) * vb + s * ub; }
};

double signed_part_average(const ConvexFlux& fl, double v, double u, bool positive_part);

// Integrals of dF/da and dF/db for the Godunov flux along an affine path with
// a(s) >= b(s). The switching set {f(a) >= f(b)} is resolved by bisection;
// each smooth piece integrates to slope_avg(endpoints) * piece length. A
// piece that rides the kink along the diagonal a = b (shock cell pairs in
// otherwise equal states) takes the sonic split: the positive part of f'
// belongs to the a-slot and the negative part to the b-slot, which is the
// one-sided limit from the admissible region b <= a.
void godunov_path_average(const ConvexFlux& fl, const PathPair& p, double& A, double& B) {
  auto g = [&](double s) { return fl.f(p.a(s)) - fl.f(p.b(s)); };
  const auto cuts = piece_boundaries(g);
  A = 0.0;
  B = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double s0 = cuts[k];
    const double s1 = cuts[k + 1];
    if (s1 <= s0) continue;
    const double smid = 0.5 * (s0 + s1);
    const double mid_a = p.a(smid);
    const double mid_b = p.b(smid);
    const double state_scale = 1.0 + std::abs(mid_a) + std::abs(mid_b);
    const double tie = 1e-11 * (1.0 + std::abs(fl.f(mid_a)) + std::abs(fl.f(mid_b)));
    if (std::abs(g(smid)) <= tie && std::abs(mid_a - mid_b) <= 1e-9 * state_scale) {
      A += signed_part_average(fl, p.a(s0), p.a(s1), true) * (s1 - s0);
      B += signed_part_average(fl, p.b(s0), p.b(s1), false) * (s1 - s0);
    } else if (g(smid) >= -tie) {
      A += divided_difference(fl, p.a(s0), p.a(s1)) * (s1 - s0);
    } else {
      B += divided_difference(fl, p.b(s0), p.b(s1)) * (s1 - s0);
    }
  }
}

// Path average of the positive (negative) part of f' along the affine
// segment from v to u, i.e. the divided difference of the clipped flux
// f(max(x, w)) respectively f(min(x, w)).
double signed_part_average(const ConvexFlux& fl, double v, double u, bool positive_part) {
  if (fl.minimizer) {
    const double w = *fl.minimizer;
    const double lo = std::min(v, u);
    const double hi = std::max(v, u);
    if (positive_part) {
      if (hi <= w) return 0.0;
      if (lo >= w) return divided_difference(fl, v, u);
      // straddling: only the part of the path above w contributes
      const double frac = (hi - w) / (hi - lo);
      return divided_difference(fl, w, hi) * frac;
    }
    if (lo >= w) return 0.0;
    if (hi <= w) return divided_difference(fl, v, u);
    const double frac = (w - lo) / (hi - lo);
    return divided_difference(fl, lo, w) * frac;
  }
  auto dpart = [&](double x) {
    const double d = fl.f_prime(x);
    return positive_part ? std::max(d, 0.0) : std::min(d, 0.0);
  };
  if (std::abs(u - v) <= kPathEps * (1.0 + std::abs(u) + std::abs(v)))
    return dpart(0.5 * (u + v));
  auto path = [&](double s) { return (1.0 - s) * v + s * u; };
  auto gp = [&](double s) { return fl.f_prime(path(s)); };
  double lo = 0.0, hi = 1.0;
  const double g0 = gp(0.0), g1 = gp(1.0);
  if ((g0 >= 0.0) == (g1 >= 0.0)) {
    const bool active = positive_part ? (g0 >= 0.0) : (g0 < 0.0);
    if (!active) return 0.0;
    return (fl.f(u) - fl.f(v)) / (u - v);
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((gp(mid) >= 0.0) == (g0 >= 0.0))
      lo = mid;
    else
      hi = mid;
  }
  const double s_star = 0.5 * (lo + hi);
  const bool first_active = positive_part ? (g0 >= 0.0) : (g0 < 0.0);
  const double s_begin = first_active ? 0.0 : s_star;
  const double s_end = first_active ? s_star : 1.0;
  return (fl.f(path(s_end)) - fl.f(path(s_begin))) / (u - v);
}

}  // namespace

LinearizationCoefficients linearization_coefficients(const NumericalFlux& nf,
                                                     const GridFunction& u,
                                                     const GridFunction& v) {
  if (!(u.grid() == v.grid())) fail(Errc::IncompatibleFunctions, "grids differ");
  const double tol =
      1e-9 * (1.0 + std::max(std::abs(u.max_value()), std::abs(u.min_value())) +
              std::max(std::abs(v.max_value()), std::abs(v.min_value())));
  if (!is_decreasing(u, tol) || !is_decreasing(v, tol))
    fail(Errc::NotDecreasing, "linearization requires decreasing grid functions");

  const long long n = static_cast<long long>(u.size());
  LinearizationCoefficients out;
  out.A.resize(u.size());
  out.B.resize(u.size());

  switch (nf.scheme) {
    case Scheme::LaxFriedrichs: {
      if (!nf.lambda) fail(Errc::MissingLambda, "Lax-Friedrichs linearization needs lambda");
      const double half_inv_lambda = 0.5 / *nf.lambda;
      for (long long i = 0; i < n; ++i) {
        const double dd = divided_difference(nf.flux, v.value_or_far(i), u.value_or_far(i));
        out.A[static_cast<std::size_t>(i)] = 0.5 * dd + half_inv_lambda;
        out.B[static_cast<std::size_t>(i)] = 0.5 * dd - half_inv_lambda;
      }
      break;
    }
    case Scheme::EngquistOsher: {
      for (long long i = 0; i < n; ++i) {
        const double vi = v.value_or_far(i);
        const double ui = u.value_or_far(i);
        out.A[static_cast<std::size_t>(i)] = signed_part_average(nf.flux, vi, ui, true);
        out.B[static_cast<std::size_t>(i)] = signed_part_average(nf.flux, vi, ui, false);
      }
      break;
    }
    case Scheme::Godunov: {
      // A[i] comes from interface (i, i+1), B[i] from interface (i-1, i).
      std::vector<double> a_at(u.size() + 1), b_at(u.size() + 1);
      for (long long j = -1; j < n; ++j) {
        PathPair p{v.value_or_far(j),     u.value_or_far(j),
                   v.value_or_far(j + 1), u.value_or_far(j + 1)};
        double A = 0.0, B = 0.0;
        godunov_path_average(nf.flux, p, A, B);
        if (j >= 0) a_at[static_cast<std::size_t>(j)] = A;
        b_at[static_cast<std::size_t>(j + 1)] = B;
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        out.A[i] = a_at[i];
        out.B[i] = b_at[i];
      }
      break;
    }
  }
  return out;
}

ContractivityReport check_contractivity_conditions(const std::vector<double>& A,
                                                   const std::vector<double>& B, double lambda,
                                                   double slack) {
  if (A.size() != B.size())
    fail(Errc::IncompatibleCoefficients, "A and B must cover the same index range");
  ContractivityReport rep;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!(A[i] >= -slack)) {
      rep = {false, i, "A_i >= 0"};
      return rep;
    }
    if (i > 0 && !(A[i] <= A[i - 1] + slack)) {
      rep = {false, i, "A_i <= A_{i-1}"};
      return rep;
    }
    if (!(B[i] <= slack)) {
      rep = {false, i, "B_i <= 0"};
      return rep;
    }
    if (i > 0 && !(B[i - 1] >= B[i] - slack)) {
      rep = {false, i, "B_{i-1} >= B_i"};
      return rep;
    }
    if (!(lambda * (A[i] - B[i]) <= 1.0 + slack)) {
      rep = {false, i, "lambda (A_i - B_i) <= 1"};
      return rep;
    }
  }
  return rep;
}

bool is_convex_sampled(const ConvexFlux& flux, double lo, double hi, std::size_t n) {
  double prev = flux.f_prime(lo);
  for (std::size_t k = 1; k <= n; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
    const double d = flux.f_prime(x);
    if (d < prev - 1e-12 * (1.0 + std::abs(prev))) return false;
    prev = d;
  }
  return true;
}

double consistency_defect(const NumericalFlux& nf, double lo, double hi, std::size_t n) {
  double worst = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
    worst = std::max(worst, std::abs(nf(x, x) - nf.flux.f(x)));
  }
  return worst;
}

bool is_monotone_sampled(const NumericalFlux& nf, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const double a = lo + h * static_cast<double>(i);
      const double b = lo + h * static_cast<double>(j);
      const double base = nf(a, b);
      if (i < n && nf(a + h, b) < base - 1e-12) return false;
      if (j < n && nf(a, b + h) > base + 1e-12) return false;
    }
  }
  return true;
}

}  // namespace wass1d
