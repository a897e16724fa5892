#pragma once

#include <cstddef>

#include "wass1d/flux.hpp"

namespace wass1d::kernels {

enum class Backend { serial, openmp };

/// Interface fluxes over a padded state array. `upad` holds `pad` ghost cells
/// on each side of `n` interior cells; fluxes[j] = F(u_{j-1}, u_j) for
/// j = 0..n, interface j sitting on the left boundary of interior cell j.
void interface_fluxes(Backend backend, const NumericalFlux& nf, const double* upad,
                      std::size_t pad, std::size_t n, double* fluxes);

/// fluxes[j] = F(a[j], b[j]) for j = 0..count-1 (reconstructed face pairs).
void pairwise_fluxes(Backend backend, const NumericalFlux& nf, const double* a, const double* b,
                     std::size_t count, double* fluxes);

/// out[i] = u[i] - lambda (fluxes[i+1] - fluxes[i]) + source_dt[i];
/// source_dt may be null.
void conservative_update(Backend backend, const double* u, const double* fluxes, std::size_t n,
                         double lambda, const double* source_dt, double* out);

/// ENO point-value face states of every interior cell. For interface j,
/// minus[j] is the right-face value of cell j-1 and plus[j] the left-face
/// value of cell j (ghost cells contribute their constant state). Stencils
/// grow adaptively by smallest-magnitude difference, ties extending left.
void eno_face_states(Backend backend, const double* upad, std::size_t pad, std::size_t n,
                     int order, double* minus, double* plus);

}  // namespace wass1d::kernels
