#include "wass1d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wass1d/errors.hpp"

namespace wass1d {

SchemeOrder order_from_name(const std::string& name) {
  if (name == "1" || name == "monotone") return SchemeOrder::Monotone1;
  if (name == "eno2") return SchemeOrder::Eno2;
  if (name == "eno3") return SchemeOrder::Eno3;
  fail(Errc::InvalidConfig, "unknown scheme order '" + name + "' (expected 1, eno2, eno3)");
}

const char* order_name(SchemeOrder o) {
  switch (o) {
    case SchemeOrder::Monotone1: return "1";
    case SchemeOrder::Eno2: return "eno2";
    case SchemeOrder::Eno3: return "eno3";
  }
  return "?";
}

namespace {

std::size_t pad_for(const SchemeConfig& cfg) {
  return cfg.order == SchemeOrder::Monotone1 ? 1 : (cfg.order == SchemeOrder::Eno2 ? 2 : 3);
}

std::vector<double> padded_values(const GridFunction& u, std::size_t pad) {
  std::vector<double> buf(u.size() + 2 * pad);
  std::fill(buf.begin(), buf.begin() + static_cast<long long>(pad), u.far_left());
  std::copy(u.values().begin(), u.values().end(), buf.begin() + static_cast<long long>(pad));
  std::fill(buf.end() - static_cast<long long>(pad), buf.end(), u.far_right());
  return buf;
}

void require_cfl(const NumericalFlux& nf, const GridFunction& u, double lambda) {
  const double speed = max_wave_speed(nf.flux, u.min_value(), u.max_value());
  if (lambda * speed > 1.0 + 1e-12)
    fail(Errc::CflViolation, "lambda * max|f'| exceeds 1 on the current state box");
}

std::vector<double> sampled_source(const GridFunction& u, const CellSource& source, double t,
                                   double dt) {
  std::vector<double> s;
  if (!source) return s;
  s.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) s[i] = dt * source(u.grid().center(i), t);
  return s;
}

}  // namespace

GridFunction step_monotone(const GridFunction& u, const SchemeConfig& cfg, double dt,
                           double t_now) {
  const double lambda = dt / u.grid().dx;
  const NumericalFlux nf = cfg.nf.with_lambda(lambda);
  require_cfl(nf, u, lambda);

  const std::size_t n = u.size();
  const std::vector<double> upad = padded_values(u, 1);
  std::vector<double> fluxes(n + 1);
  kernels::interface_fluxes(cfg.backend, nf, upad.data(), 1, n, fluxes.data());

  const std::vector<double> src = sampled_source(u, cfg.source, t_now, dt);
  std::vector<double> out(n);
  kernels::conservative_update(cfg.backend, upad.data() + 1, fluxes.data(), n, lambda,
                               src.empty() ? nullptr : src.data(), out.data());
  return u.with_values(std::move(out));
}

GridFunction step_eno_rk3(const GridFunction& u, const SchemeConfig& cfg, double dt,
                          double t_now) {
  if (cfg.source) fail(Errc::InvalidConfig, "sources are supported by the monotone scheme only");
  const std::size_t n = u.size();
  const std::size_t pad = pad_for(cfg);
  const int order = cfg.order == SchemeOrder::Eno2 ? 2 : 3;
  const double dx = u.grid().dx;
  const double lambda = dt / dx;
  const NumericalFlux nf = cfg.nf.with_lambda(lambda);
  require_cfl(nf, u, lambda);

  std::vector<double> minus(n + 1), plus(n + 1), fluxes(n + 1);
  std::vector<double> stage_pad(n + 2 * pad);

  // L(w) = -(F_{i+1} - F_i)/dx with Godunov flux on ENO face states;
  // returns w + dt*L(w) written into `out`.
  auto euler_stage = [&](const std::vector<double>& wpad, std::vector<double>& out) {
    kernels::eno_face_states(cfg.backend, wpad.data(), pad, n, order, minus.data(),
                             plus.data());
    kernels::pairwise_fluxes(cfg.backend, nf, minus.data(), plus.data(), n + 1, fluxes.data());
    out.resize(n);
    kernels::conservative_update(cfg.backend, wpad.data() + pad, fluxes.data(), n, lambda,
                                 nullptr, out.data());
  };

  auto repad = [&](const std::vector<double>& interior) {
    std::fill(stage_pad.begin(), stage_pad.begin() + static_cast<long long>(pad), u.far_left());
    std::copy(interior.begin(), interior.end(), stage_pad.begin() + static_cast<long long>(pad));
    std::fill(stage_pad.end() - static_cast<long long>(pad), stage_pad.end(), u.far_right());
  };

  (void)t_now;
  const std::vector<double> upad = padded_values(u, pad);
  std::vector<double> u1, u2, u3;
  euler_stage(upad, u1);

  repad(u1);
  euler_stage(stage_pad, u2);
  for (std::size_t i = 0; i < n; ++i) u2[i] = 0.75 * u.values()[i] + 0.25 * u2[i];

  repad(u2);
  euler_stage(stage_pad, u3);
  for (std::size_t i = 0; i < n; ++i)
    u3[i] = (1.0 / 3.0) * u.values()[i] + (2.0 / 3.0) * u3[i];

  return u.with_values(std::move(u3));
}

EnoInterfaceStates eno_reconstruct(const GridFunction& u, int order,
                                   kernels::Backend backend) {
  if (order != 2 && order != 3) fail(Errc::InvalidConfig, "ENO order must be 2 or 3");
  const std::size_t pad = static_cast<std::size_t>(order);
  const std::vector<double> upad = padded_values(u, pad);
  EnoInterfaceStates st;
  st.minus.resize(u.size() + 1);
  st.plus.resize(u.size() + 1);
  kernels::eno_face_states(backend, upad.data(), pad, u.size(), order, st.minus.data(),
                           st.plus.data());
  return st;
}

RunResult run(const GridFunction& u0, const SchemeConfig& cfg, double t_final) {
  if (t_final < 0.0) fail(Errc::InvalidConfig, "t_final must be nonnegative");
  const double dt =
      cfl_timestep(cfg.nf, u0.grid(), u0.min_value(), u0.max_value(), cfg.cfl_number);

  GridFunction u = u0;
  std::size_t steps = 0;
  if (t_final > 0.0) {
    const auto n_steps =
        static_cast<std::size_t>(std::ceil(t_final / dt - 1e-12));
    for (std::size_t k = 0; k < n_steps; ++k) {
      const double t_now = static_cast<double>(k) * dt;
      const double dt_k = (k + 1 == n_steps) ? (t_final - t_now) : dt;
      u = cfg.order == SchemeOrder::Monotone1 ? step_monotone(u, cfg, dt_k, t_now)
                                              : step_eno_rk3(u, cfg, dt_k, t_now);
      ++steps;
    }
  }

  const double edge = std::max(std::abs(u.values().front() - u.far_left()),
                               std::abs(u.values().back() - u.far_right()));
  return RunResult{std::move(u), steps, dt, edge};
}

}  // namespace wass1d
