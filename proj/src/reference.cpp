#include "wass1d/reference.hpp"

#include <cmath>
#include <vector>

namespace wass1d::ref {

namespace {

double cell(const GridFunction& u, long long i) { return u.value_or_far(i); }

// ENO face values of cell i by explicit stencil walk.
void eno_faces(const GridFunction& u, long long i, int order, double& left, double& right) {
  long long l = i, r = i;
  for (int m = 1; m < order; ++m) {
    auto undivided = [&](long long a, int k) {
      // k-th order difference over cells a..a+k
      std::vector<double> w(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) w[static_cast<std::size_t>(j)] = cell(u, a + j);
      for (int lev = 0; lev < k; ++lev)
        for (int j = 0; j + lev + 1 <= k; ++j)
          w[static_cast<std::size_t>(j)] =
              w[static_cast<std::size_t>(j) + 1] - w[static_cast<std::size_t>(j)];
      return w[0];
    };
    const double dl = undivided(l - 1, m);
    const double dr = undivided(l, m);
    if (std::abs(dl) <= std::abs(dr))
      --l;
    else
      ++r;
  }
  (void)r;
  // Newton interpolation through cell centers l..l+order-1 (abscissae 0..order-1).
  const double w0 = cell(u, l);
  const double w1 = cell(u, l + 1);
  const double xi_l = static_cast<double>(i - l) - 0.5;
  const double xi_r = static_cast<double>(i - l) + 0.5;
  if (order == 2) {
    left = w0 + (w1 - w0) * xi_l;
    right = w0 + (w1 - w0) * xi_r;
  } else {
    const double w2 = cell(u, l + 2);
    const double d2 = 0.5 * (w2 - 2.0 * w1 + w0);
    left = w0 + (w1 - w0) * xi_l + d2 * xi_l * (xi_l - 1.0);
    right = w0 + (w1 - w0) * xi_r + d2 * xi_r * (xi_r - 1.0);
  }
}

std::vector<double> eno_euler_stage(const GridFunction& u, const std::vector<double>& w,
                                    const NumericalFlux& nf, int order, double lambda) {
  const long long n = static_cast<long long>(u.size());
  auto padded = u.with_values(w);
  std::vector<double> minus(u.size() + 1), plus(u.size() + 1);
  minus[0] = padded.far_left();
  plus[u.size()] = padded.far_right();
  for (long long i = 0; i < n; ++i) {
    double fl = 0.0, fr = 0.0;
    eno_faces(padded, i, order, fl, fr);
    plus[static_cast<std::size_t>(i)] = fl;
    minus[static_cast<std::size_t>(i) + 1] = fr;
  }
  std::vector<double> out(u.size());
  for (long long i = 0; i < n; ++i) {
    const double f_right = nf(minus[static_cast<std::size_t>(i) + 1],
                              plus[static_cast<std::size_t>(i) + 1]);
    const double f_left =
        nf(minus[static_cast<std::size_t>(i)], plus[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] - lambda * (f_right - f_left);
  }
  return out;
}

}  // namespace

GridFunction step_monotone(const GridFunction& u, const SchemeConfig& cfg, double dt,
                           double t_now) {
  const double lambda = dt / u.grid().dx;
  const NumericalFlux nf = cfg.nf.with_lambda(lambda);
  std::vector<double> out(u.size());
  for (long long i = 0; i < static_cast<long long>(u.size()); ++i) {
    const double f_right = nf(cell(u, i), cell(u, i + 1));
    const double f_left = nf(cell(u, i - 1), cell(u, i));
    out[static_cast<std::size_t>(i)] = cell(u, i) - lambda * (f_right - f_left);
    if (cfg.source) out[static_cast<std::size_t>(i)] += dt * cfg.source(u.grid().center(i), t_now);
  }
  return u.with_values(std::move(out));
}

GridFunction step_eno_rk3(const GridFunction& u, const SchemeConfig& cfg, double dt) {
  const int order = cfg.order == SchemeOrder::Eno2 ? 2 : 3;
  const double lambda = dt / u.grid().dx;
  const NumericalFlux nf = cfg.nf.with_lambda(lambda);
  const std::vector<double>& w0 = u.values();
  std::vector<double> u1 = eno_euler_stage(u, w0, nf, order, lambda);
  std::vector<double> u2 = eno_euler_stage(u, u1, nf, order, lambda);
  for (std::size_t i = 0; i < u.size(); ++i) u2[i] = 0.75 * w0[i] + 0.25 * u2[i];
  std::vector<double> u3 = eno_euler_stage(u, u2, nf, order, lambda);
  for (std::size_t i = 0; i < u.size(); ++i) u3[i] = (1.0 / 3.0) * w0[i] + (2.0 / 3.0) * u3[i];
  return u.with_values(std::move(u3));
}

}  // namespace wass1d::ref
