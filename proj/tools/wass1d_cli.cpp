#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "wass1d/discrete_shock.hpp"
#include "wass1d/duality.hpp"
#include "wass1d/errors.hpp"
#include "wass1d/study.hpp"

namespace {

using namespace wass1d;

int cmd_study(const std::string& config_path, RunConfig cfg, bool have_cells,
              const std::vector<std::size_t>& cells) {
  if (!config_path.empty()) cfg = load_config(config_path);
  if (have_cells) cfg.cell_counts = cells;
  const ErrorTable table = run_study(cfg);
  if (cfg.out_path.empty())
    emit(table, cfg.format, std::cout);
  else
    emit_to_file(table, cfg.format, cfg.out_path);
  return 0;
}

int cmd_profile(const std::string& flux, double lambda, double left, double right,
                std::size_t window, double tol, const std::string& out) {
  const NumericalFlux nf{scheme_from_name(flux), burgers_flux(), lambda};
  const DiscreteShockProfile prof = compute_profile(nf, left, right, lambda, window, tol);
  std::ostringstream head;
  head << "# scheme=" << scheme_name(prof.nf.scheme) << " lambda=" << prof.lambda
       << " speed=" << prof.speed << " residual=" << prof.residual << " shift="
       << prof.shift_cells << "/" << prof.shift_steps
       << (prof.approximate_ratio ? " (approximate ratio)" : "") << "\n";
  const std::string body = head.str() + profile_to_text(prof);
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(out);
    if (!os) fail(Errc::InvalidConfig, "cannot open '" + out + "'");
    os << body;
  }
  return 0;
}

int cmd_verify(const std::string& flux, unsigned seed, std::size_t experiments,
               std::size_t n_cells, std::size_t n_steps, const std::string& out) {
  const NumericalFlux nf{scheme_from_name(flux), burgers_flux(), std::nullopt};
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Grid grid(-1.0, 2.0 / static_cast<double>(n_cells), n_cells);

  std::ostringstream report;
  bool all_ok = true;
  for (std::size_t e = 0; e < experiments; ++e) {
    const double a = -0.5 + 0.3 * unif(rng);
    const double w = 0.3 + 0.4 * unif(rng);
    const double d = 0.3 * w * unif(rng);
    const StepFunction u0({a, a + w}, {1.0, 0.0, -1.0});
    const StepFunction v0({a + d, a + w - d}, {1.0, 0.0, -1.0});
    const ContractivityExperiment exp =
        contractivity_experiment(u0, v0, {}, {}, nf, grid, n_steps);
    const CoefficientConditionsReport cond =
        verify_coefficient_conditions(nf, exp.u_traj, exp.v_traj, exp.lambda);
    const bool ok = exp.max_violation <= 1e-10 * exp.scale && cond.ok;
    all_ok = all_ok && ok;
    report << "# experiment " << e << " max_violation=" << exp.max_violation
           << " scale=" << exp.scale << " conditions=" << (cond.ok ? "pass" : "FAIL")
           << " => " << (ok ? "pass" : "FAIL") << "\n";
    report << exp.to_csv();
  }
  if (out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream os(out);
    if (!os) fail(Errc::InvalidConfig, "cannot open '" + out + "'");
    os << report.str();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D scalar conservation-law laboratory: convergence studies in W1/L1, "
               "discrete shock profiles, transport-stability verification"};
  app.require_subcommand(1);

  // study
  auto* study = app.add_subcommand("study", "refinement study against the exact solution");
  std::string config_path;
  wass1d::RunConfig cfg;
  std::vector<std::size_t> cells;
  std::string order_name_opt = "1";
  study->add_option("--config", config_path, "flat key=value config file");
  study->add_option("--flux", cfg.flux_name, "numerical flux: lxf | eo | godunov");
  study->add_option("--order", order_name_opt, "scheme order: 1 | eno2 | eno3");
  study->add_option("--cfl", cfg.cfl_number, "CFL number");
  study->add_option("--t", cfg.t_final, "output time");
  study->add_option("--cells", cells, "cell counts (repeatable)")->delimiter(',');
  study->add_option("--out", cfg.out_path, "output path (default stdout)");
  study->add_option("--format", cfg.format, "csv | markdown");

  // profile
  auto* profile = app.add_subcommand("profile", "discrete shock profile export");
  std::string pflux = "lxf";
  double plambda = 0.25, pleft = 1.0, pright = -1.0, ptol = 1e-10;
  std::size_t pwindow = 80;
  std::string pout;
  profile->add_option("--flux", pflux, "numerical flux: lxf | eo | godunov");
  profile->add_option("--lambda", plambda, "mesh ratio dt/dx");
  profile->add_option("--left", pleft, "upstream state");
  profile->add_option("--right", pright, "downstream state");
  profile->add_option("--window", pwindow, "half window in cells");
  profile->add_option("--tol", ptol, "translation residual tolerance");
  profile->add_option("--out", pout, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "transport-stability / dual-condition report");
  std::string vflux = "godunov";
  unsigned vseed = 1;
  std::size_t vexperiments = 5, vcells = 64, vsteps = 40;
  std::string vout;
  verify->add_option("--flux", vflux, "numerical flux: lxf | eo | godunov");
  verify->add_option("--seed", vseed, "random seed");
  verify->add_option("--experiments", vexperiments, "number of randomized experiments");
  verify->add_option("--cells", vcells, "grid cells");
  verify->add_option("--steps", vsteps, "time steps per experiment");
  verify->add_option("--out", vout, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (study->parsed()) {
      cfg.order = wass1d::order_from_name(order_name_opt);
      return cmd_study(config_path, cfg, !cells.empty(), cells);
    }
    if (profile->parsed()) return cmd_profile(pflux, plambda, pleft, pright, pwindow, ptol, pout);
    if (verify->parsed()) return cmd_verify(vflux, vseed, vexperiments, vcells, vsteps, vout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
