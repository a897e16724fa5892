// Timing comparison of the serial and OpenMP kernels, plus end-to-end steps.

#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "wass1d/kernels.hpp"
#include "wass1d/solver.hpp"

using namespace wass1d;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> ramp_values(std::size_t n, std::size_t pad) {
  std::vector<double> v(n + 2 * pad, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    v[pad + i] = x < 0.3 ? 2.0 : (x < 0.7 ? 2.0 - 5.0 * (x - 0.3) : 0.0);
  }
  for (std::size_t i = 0; i < pad; ++i) v[n + pad + i] = 0.0;
  return v;
}

void bench_kernels(std::size_t n, int reps) {
  const NumericalFlux nf{Scheme::Godunov, burgers_flux(), 0.15};
  const std::vector<double> upad3 = ramp_values(n, 3);
  std::vector<double> fluxes(n + 1), minus(n + 1), plus(n + 1), out(n);

  auto time_backend = [&](kernels::Backend be) {
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      kernels::interface_fluxes(be, nf, upad3.data() + 2, 1, n, fluxes.data());
    const double t_flux = seconds_since(t0);
    const auto t1 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      kernels::eno_face_states(be, upad3.data(), 3, n, 3, minus.data(), plus.data());
    const double t_eno = seconds_since(t1);
    const auto t2 = clock_type::now();
    for (int r = 0; r < reps; ++r)
      kernels::conservative_update(be, upad3.data() + 3, fluxes.data(), n, 0.15, nullptr,
                                   out.data());
    const double t_upd = seconds_since(t2);
    return std::array<double, 3>{t_flux, t_eno, t_upd};
  };

  const auto ser = time_backend(kernels::Backend::serial);
  const auto par = time_backend(kernels::Backend::openmp);
  const double work = static_cast<double>(n) * reps / 1e6;
  const char* names[3] = {"godunov fluxes", "eno3 faces", "update"};
  for (int k = 0; k < 3; ++k)
    std::printf("%-15s n=%-8zu serial %8.1f Mcell/s   openmp %8.1f Mcell/s   speedup %.2fx\n",
                names[k], n, work / ser[k], work / par[k], ser[k] / par[k]);
}

GridFunction ramp_data(std::size_t n) {
  const Grid grid(0.0, 1.0 / static_cast<double>(n), n);
  std::vector<double> vals(ramp_values(n, 0));
  return GridFunction(grid, std::move(vals), 2.0, 0.0);
}

void bench_steps(const char* label, SchemeOrder order, std::size_t n, int steps) {
  const GridFunction u0 = ramp_data(n);
  const NumericalFlux nf{Scheme::Godunov, burgers_flux(), std::nullopt};
  const double dt = cfl_timestep(nf, u0.grid(), 0.0, 2.0, 0.3);

  auto time_steps = [&](kernels::Backend be) {
    SchemeConfig cfg{nf, order, 0.3, {}, be};
    GridFunction u = u0;
    const auto t0 = clock_type::now();
    for (int k = 0; k < steps; ++k)
      u = order == SchemeOrder::Monotone1 ? step_monotone(u, cfg, dt)
                                          : step_eno_rk3(u, cfg, dt);
    return seconds_since(t0);
  };

  const double ts = time_steps(kernels::Backend::serial);
  const double tp = time_steps(kernels::Backend::openmp);
  const double updates = static_cast<double>(n) * steps / 1e6;
  std::printf("%-15s n=%-8zu serial %8.1f Mcell/s   openmp %8.1f Mcell/s   speedup %.2fx\n",
              label, n, updates / ts, updates / tp, ts / tp);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_kernels(1 << 16, 400);
  bench_kernels(1 << 20, 30);
  bench_steps("monotone step", SchemeOrder::Monotone1, 1 << 20, 40);
  bench_steps("eno3-rk3 step", SchemeOrder::Eno3, 1 << 20, 10);
  return 0;
}
