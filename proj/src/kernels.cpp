#include "wass1d/kernels.hpp"

#include <cmath>

#include "wass1d/errors.hpp"

namespace wass1d::kernels {

namespace {

// Parallelism pays off only on long rows; below this the loops run serially
// either way, keeping unit-size calls cheap.
constexpr std::size_t kParallelCutoff = 4096;

struct EnoFaces {
  double left;
  double right;
};

// Undivided difference of order k over cells a..a+k, by iterated differencing.
inline double undivided_difference(const double* u, long long a, int k) {
  double w[4];
  for (int j = 0; j <= k; ++j) w[j] = u[a + j];
  for (int lev = 0; lev < k; ++lev)
    for (int j = 0; j + lev + 1 <= k; ++j) w[j] = w[j + 1] - w[j];
  return w[0];
}

// Point-value ENO reconstruction for one cell: stencil starts at the cell and
// grows toward the side with the smaller-magnitude difference (ties go left),
// then the Newton interpolant through the chosen cell centers is evaluated at
// both faces of the cell. Offsets are in units of dx.
inline EnoFaces eno_cell(const double* u, long long i, int order) {
  long long l = i;
  for (int m = 1; m < order; ++m) {
    const double d_left = undivided_difference(u, l - 1, m);
    const double d_right = undivided_difference(u, l, m);
    if (std::abs(d_left) <= std::abs(d_right)) --l;
  }
  const double w0 = u[l];
  const double w1 = u[l + 1];
  const double xi_l = static_cast<double>(i - l) - 0.5;
  const double xi_r = static_cast<double>(i - l) + 0.5;
  if (order == 2)
    return {w0 + (w1 - w0) * xi_l, w0 + (w1 - w0) * xi_r};
  const double w2 = u[l + 2];
  const double d2 = 0.5 * (w2 - 2.0 * w1 + w0);
  return {w0 + (w1 - w0) * xi_l + d2 * xi_l * (xi_l - 1.0),
          w0 + (w1 - w0) * xi_r + d2 * xi_r * (xi_r - 1.0)};
}

}  // namespace

void interface_fluxes(Backend backend, const NumericalFlux& nf, const double* upad,
                      std::size_t pad, std::size_t n, double* fluxes) {
  const long long m = static_cast<long long>(n);
  const double* u = upad + pad;
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (long long j = 0; j <= m; ++j) fluxes[j] = nf(u[j - 1], u[j]);
  } else {
    for (long long j = 0; j <= m; ++j) fluxes[j] = nf(u[j - 1], u[j]);
  }
}

void pairwise_fluxes(Backend backend, const NumericalFlux& nf, const double* a, const double* b,
                     std::size_t count, double* fluxes) {
  const long long m = static_cast<long long>(count);
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static) if (count >= kParallelCutoff)
    for (long long j = 0; j < m; ++j) fluxes[j] = nf(a[j], b[j]);
  } else {
    for (long long j = 0; j < m; ++j) fluxes[j] = nf(a[j], b[j]);
  }
}

void conservative_update(Backend backend, const double* u, const double* fluxes, std::size_t n,
                         double lambda, const double* source_dt, double* out) {
  const long long m = static_cast<long long>(n);
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (long long i = 0; i < m; ++i) {
      out[i] = u[i] - lambda * (fluxes[i + 1] - fluxes[i]);
      if (source_dt) out[i] += source_dt[i];
    }
  } else {
    for (long long i = 0; i < m; ++i) {
      out[i] = u[i] - lambda * (fluxes[i + 1] - fluxes[i]);
      if (source_dt) out[i] += source_dt[i];
    }
  }
}

void eno_face_states(Backend backend, const double* upad, std::size_t pad, std::size_t n,
                     int order, double* minus, double* plus) {
  if (order != 2 && order != 3) fail(Errc::InvalidConfig, "ENO order must be 2 or 3");
  if (pad < static_cast<std::size_t>(order))
    fail(Errc::InvalidConfig, "padding too small for the ENO stencil");
  const long long m = static_cast<long long>(n);
  const double* u = upad + pad;
  // Ghost cells are constant, so their face values are the far states.
  minus[0] = u[-1];
  plus[m] = u[m];
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (long long i = 0; i < m; ++i) {
      const EnoFaces faces = eno_cell(u, i, order);
      plus[i] = faces.left;
      minus[i + 1] = faces.right;
    }
  } else {
    for (long long i = 0; i < m; ++i) {
      const EnoFaces faces = eno_cell(u, i, order);
      plus[i] = faces.left;
      minus[i + 1] = faces.right;
    }
  }
}

}  // namespace wass1d::kernels
