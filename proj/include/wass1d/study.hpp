#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wass1d/flux.hpp"
#include "wass1d/solver.hpp"
#include "wass1d/step_function.hpp"

namespace wass1d {

/// Configuration of one refinement study: scheme, physical setup, cell counts
/// and output shape. Defaults to the Burgers two-jump benchmark.
struct RunConfig {
  std::string flux_name = "godunov";  // lxf | eo | godunov
  SchemeOrder order = SchemeOrder::Monotone1;
  std::string physical_flux = "burgers";
  double cfl_number = 0.3;
  double t_final = 0.15;
  std::vector<std::size_t> cell_counts = {32, 64, 128, 256, 512, 1024, 2048, 4096};
  double window_left = 0.0;
  double window_right = 1.0;
  std::vector<double> data_breakpoints = {0.25, 0.5};
  std::vector<double> data_values = {2.0, 1.0, 0.0};
  std::string format = "csv";  // csv | markdown
  std::string out_path;        // empty: stdout
  kernels::Backend backend = kernels::Backend::openmp;
  std::size_t margin_cells = 15;  // minimum shock-to-window margin per run

  StepFunction initial_data() const;
  ConvexFlux physical() const;
};

struct ErrorRow {
  std::size_t n = 0;
  double l1 = 0.0;
  double l1_ooc = 0.0;  // NaN on the first row
  double w1 = 0.0;
  double w1_ooc = 0.0;  // NaN on the first row
};

struct ErrorTable {
  std::vector<ErrorRow> rows;
};

/// log(err_coarse / err_fine) / log(ratio).
double observed_order(double err_coarse, double err_fine, double ratio);

/// Project, run, compare with the exact front-tracked solution at t_final,
/// fill the order columns. Windows are widened by whole cells (dx kept) when
/// the margin rule fails.
ErrorTable run_study(const RunConfig& cfg);

/// CSV columns n,l1,l1_ooc,w1,w1_ooc with 3-significant-digit errors and
/// 3-decimal orders; markdown mirrors the same layout.
void emit(const ErrorTable& table, const std::string& format, std::ostream& os);
void emit_to_file(const ErrorTable& table, const std::string& format, const std::string& path);

/// Inverse of the CSV emitter (used for round-trip checks).
ErrorTable parse_csv(std::istream& is);

/// Flat key=value config file, '#' comments.
RunConfig load_config(const std::string& path);

}  // namespace wass1d
