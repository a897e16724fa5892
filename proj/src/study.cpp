#include "wass1d/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "wass1d/errors.hpp"
#include "wass1d/front_tracker.hpp"
#include "wass1d/metrics.hpp"

namespace wass1d {

StepFunction RunConfig::initial_data() const {
  return StepFunction(data_breakpoints, data_values);
}

ConvexFlux RunConfig::physical() const {
  if (physical_flux == "burgers") return burgers_flux();
  fail(Errc::InvalidConfig, "unknown physical flux '" + physical_flux + "'");
}

double observed_order(double err_coarse, double err_fine, double ratio) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0))
    fail(Errc::DegenerateError, "orders need positive errors");
  if (!(ratio > 1.0)) fail(Errc::DegenerateError, "refinement ratio must exceed 1");
  return std::log(err_coarse / err_fine) / std::log(ratio);
}

namespace {

// Extreme shock positions over [0, t_final]: fronts move linearly between
// interactions, so the hull is spanned by event-time positions.
void shock_hull(const StepFunction& u0, const ConvexFlux& f, double t_final, double& lo,
                double& hi) {
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  double t = 0.0;
  StepFunction u = u0;
  auto absorb = [&](const StepFunction& s) {
    if (s.jump_count() == 0) return;
    lo = std::min(lo, s.breakpoints().front());
    hi = std::max(hi, s.breakpoints().back());
  };
  absorb(u);
  while (t < t_final) {
    const FrontState st = FrontState::from_step_function(u, f, t);
    const auto next = first_interaction_time(st);
    if (!next || t + *next >= t_final) break;
    t += *next;
    u = evolve(u0, f, t);
    absorb(u);
  }
  absorb(evolve(u0, f, t_final));
}

}  // namespace

ErrorTable run_study(const RunConfig& cfg) {
  const StepFunction u0 = cfg.initial_data();
  if (!u0.is_decreasing()) fail(Errc::NotDecreasing, "initial data must be decreasing");
  for (std::size_t k = 0; k + 1 < cfg.cell_counts.size(); ++k)
    if (!(cfg.cell_counts[k] < cfg.cell_counts[k + 1]))
      fail(Errc::InvalidConfig, "cell counts must be strictly increasing");
  if (cfg.cell_counts.empty()) fail(Errc::InvalidConfig, "no cell counts");
  if (!(cfg.window_left < cfg.window_right)) fail(Errc::InvalidConfig, "empty window");
  if (u0.jump_count() > 0 && (u0.breakpoints().front() < cfg.window_left ||
                              u0.breakpoints().back() > cfg.window_right))
    fail(Errc::WindowTooSmall, "initial jumps must lie inside the base window");

  const ConvexFlux phys = cfg.physical();
  const NumericalFlux nf{scheme_from_name(cfg.flux_name), phys, std::nullopt};
  double hull_lo = cfg.window_left, hull_hi = cfg.window_right;
  shock_hull(u0, phys, cfg.t_final, hull_lo, hull_hi);

  const StepFunction exact = evolve(u0, phys, cfg.t_final);

  ErrorTable table;
  for (std::size_t n : cfg.cell_counts) {
    const double dx = (cfg.window_right - cfg.window_left) / static_cast<double>(n);
    const double margin = static_cast<double>(cfg.margin_cells) * dx;
    const auto extra_left = static_cast<std::size_t>(
        std::max(0.0, std::ceil((margin - (hull_lo - cfg.window_left)) / dx)));
    const auto extra_right = static_cast<std::size_t>(
        std::max(0.0, std::ceil((margin - (cfg.window_right - hull_hi)) / dx)));
    const Grid grid(cfg.window_left - static_cast<double>(extra_left) * dx, dx,
                    n + extra_left + extra_right);

    SchemeConfig scheme{nf, cfg.order, cfg.cfl_number, {}, cfg.backend};
    const RunResult res = run(project(u0, grid), scheme, cfg.t_final);

    ErrorRow row;
    row.n = n;
    row.l1 = l1_distance(exact, res.u);
    row.w1 = w1(exact, res.u);
    row.l1_ooc = row.w1_ooc = std::numeric_limits<double>::quiet_NaN();
    if (!table.rows.empty()) {
      const ErrorRow& prev = table.rows.back();
      const double ratio = static_cast<double>(n) / static_cast<double>(prev.n);
      row.l1_ooc = observed_order(prev.l1, row.l1, ratio);
      row.w1_ooc = observed_order(prev.w1, row.w1, ratio);
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace {

std::string fmt_err(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", e);
  return buf;
}

std::string fmt_ooc(double o) {
  if (std::isnan(o)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", o);
  return buf;
}

}  // namespace

void emit(const ErrorTable& table, const std::string& format, std::ostream& os) {
  if (table.rows.empty()) fail(Errc::EmptyTable, "nothing to emit");
  if (format == "csv") {
    os << "n,l1,l1_ooc,w1,w1_ooc\n";
    for (const ErrorRow& r : table.rows)
      os << r.n << "," << fmt_err(r.l1) << "," << fmt_ooc(r.l1_ooc) << "," << fmt_err(r.w1)
         << "," << fmt_ooc(r.w1_ooc) << "\n";
  } else if (format == "markdown") {
    os << "| n | L1 | L1 OOC | W1 | W1 OOC |\n";
    os << "|---|----|--------|----|--------|\n";
    for (const ErrorRow& r : table.rows)
      os << "| " << r.n << " | " << fmt_err(r.l1) << " | " << fmt_ooc(r.l1_ooc) << " | "
         << fmt_err(r.w1) << " | " << fmt_ooc(r.w1_ooc) << " |\n";
  } else {
    fail(Errc::InvalidConfig, "unknown output format '" + format + "'");
  }
}

void emit_to_file(const ErrorTable& table, const std::string& format, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(Errc::InvalidConfig, "cannot open output file '" + path + "'");
  emit(table, format, os);
  if (!os.good()) fail(Errc::InvalidConfig, "write failed for '" + path + "'");
}

ErrorTable parse_csv(std::istream& is) {
  ErrorTable table;
  std::string line;
  if (!std::getline(is, line)) fail(Errc::EmptyTable, "missing header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    ErrorRow row;
    std::stringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');
    row.n = static_cast<std::size_t>(std::stoull(field));
    std::getline(ss, field, ',');
    row.l1 = std::stod(field);
    std::getline(ss, field, ',');
    row.l1_ooc = field.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(field);
    std::getline(ss, field, ',');
    row.w1 = std::stod(field);
    std::getline(ss, field, ',');
    row.w1_ooc = field.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(field);
    table.rows.push_back(row);
  }
  return table;
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(Errc::InvalidConfig, "cannot open config '" + path + "'");
  RunConfig cfg;
  std::string line;
  auto parse_doubles = [](const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  };
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "flux")
      cfg.flux_name = value;
    else if (key == "order")
      cfg.order = order_from_name(value);
    else if (key == "physical_flux")
      cfg.physical_flux = value;
    else if (key == "cfl")
      cfg.cfl_number = std::stod(value);
    else if (key == "t")
      cfg.t_final = std::stod(value);
    else if (key == "cells") {
      cfg.cell_counts.clear();
      for (double x : parse_doubles(value))
        cfg.cell_counts.push_back(static_cast<std::size_t>(x));
    } else if (key == "window") {
      const auto w = parse_doubles(value);
      if (w.size() != 2) fail(Errc::InvalidConfig, "window wants two numbers");
      cfg.window_left = w[0];
      cfg.window_right = w[1];
    } else if (key == "breakpoints")
      cfg.data_breakpoints = parse_doubles(value);
    else if (key == "values")
      cfg.data_values = parse_doubles(value);
    else if (key == "format")
      cfg.format = value;
    else if (key == "out")
      cfg.out_path = value;
    else if (key == "margin_cells")
      cfg.margin_cells = static_cast<std::size_t>(std::stoul(value));
    else
      fail(Errc::InvalidConfig, "unknown config key '" + key + "'");
  }
  return cfg;
}

}  // namespace wass1d
