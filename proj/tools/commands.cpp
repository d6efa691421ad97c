#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <vector>

#include "selforg/analytics.hpp"
#include "selforg/depletion.hpp"
#include "selforg/grid.hpp"
#include "selforg/linear_response.hpp"
#include "selforg/observables.hpp"
#include "selforg/steady_state.hpp"
#include "table.hpp"

namespace cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sorted_sweep(const RunConfig& cfg, const char* cmd) {
  if (cfg.sweep_values.empty())
    throw ConfigError(std::string(cmd) + " requires sweep.values");
  std::vector<double> values = cfg.sweep_values;
  std::sort(values.begin(), values.end());
  return values;
}

Table make_table(const RunConfig& cfg, const std::string& subcommand) {
  Table t;
  t.subcommand = subcommand;
  t.config = cfg.echo();
  return t;
}

void append_steady_columns(Table& t) {
  t.columns.insert(t.columns.end(),
                   {"eta", "theta", "bunching", "mu", "photons_per_atom", "u1",
                    "u2", "iterations", "converged"});
}

void append_steady_cells(std::vector<Cell>& row, const selforg::SweepRecord& r) {
  row.push_back(Cell::num(r.eta));
  row.push_back(Cell::num(r.theta_op));
  row.push_back(Cell::num(r.bunching));
  row.push_back(Cell::num(r.mu));
  row.push_back(Cell::num(r.photons_per_atom));
  row.push_back(Cell::num(r.u1));
  row.push_back(Cell::num(r.u2));
  row.push_back(Cell::count(r.iterations));
  row.push_back(Cell::count(r.converged ? 1 : 0));
}

int cmd_steady(const RunConfig& cfg) {
  const selforg::SpatialGrid grid(cfg.n_points);
  const selforg::SteadyState state = selforg::solve_steady(cfg.params, grid, cfg.solver);
  const selforg::AdiabaticPotential pot =
      selforg::adiabatic_potential(state, cfg.params, grid);

  selforg::SweepRecord r;
  r.eta = cfg.params.eta;
  r.theta_op = state.theta_op;
  r.bunching = state.bunching;
  r.mu = state.mu;
  r.photons_per_atom = state.photons_per_atom;
  r.u1 = pot.u1;
  r.u2 = pot.u2;
  r.iterations = state.iterations;
  r.converged = state.converged;

  Table t = make_table(cfg, "steady");
  append_steady_columns(t);
  std::vector<Cell> row;
  append_steady_cells(row, r);
  t.rows.push_back(std::move(row));
  write_table(t, cfg.out_format, cfg.out_path);

  if (!state.converged) {
    std::fprintf(stderr, "steady: not converged after %ld iterations (residual %.3e)\n",
                 state.iterations, state.residual);
    return 3;
  }
  return 0;
}

int cmd_order_sweep(const RunConfig& cfg) {
  const std::vector<double> values = sorted_sweep(cfg, "order-sweep");
  const selforg::SpatialGrid grid(cfg.n_points);
  const auto records = selforg::sweep_eta(cfg.params, grid, cfg.solver, values);

  Table t = make_table(cfg, "order-sweep");
  append_steady_columns(t);
  t.columns.push_back("error");
  bool any_ok = false;
  for (const auto& r : records) {
    std::vector<Cell> row;
    append_steady_cells(row, r);
    row.push_back(Cell::str(r.error));
    t.rows.push_back(std::move(row));
    if (r.converged && r.error.empty()) any_ok = true;
  }
  write_table(t, cfg.out_format, cfg.out_path);
  return any_ok ? 0 : 3;
}

int cmd_spectrum(const RunConfig& cfg) {
  const std::vector<double> values = sorted_sweep(cfg, "spectrum");
  const selforg::SpatialGrid grid(cfg.n_points);
  const auto points =
      selforg::spectrum_sweep(cfg.params, grid, cfg.solver, values, cfg.n_lowest);

  Table t = make_table(cfg, "spectrum");
  t.columns = {"eta", "theta", "bunching"};
  for (int k = 1; k <= cfg.n_lowest; ++k) {
    t.columns.push_back("nu_" + std::to_string(k));
    t.columns.push_back("gamma_" + std::to_string(k));
  }
  t.columns.push_back("nu_field");
  t.columns.push_back("gamma_field");
  t.columns.push_back("error");

  bool any_ok = false;
  for (const auto& pt : points) {
    std::vector<Cell> row;
    row.push_back(Cell::num(pt.eta));
    row.push_back(Cell::num(pt.ok ? pt.steady.theta_op : kNaN));
    row.push_back(Cell::num(pt.ok ? pt.steady.bunching : kNaN));
    for (int k = 0; k < cfg.n_lowest; ++k) {
      const bool have = pt.ok && k < static_cast<int>(pt.condensate_modes.size());
      row.push_back(Cell::num(have ? pt.condensate_modes[k].real() : kNaN));
      row.push_back(Cell::num(have ? -pt.condensate_modes[k].imag() : kNaN));
    }
    row.push_back(Cell::num(pt.ok ? pt.field_mode.real() : kNaN));
    row.push_back(Cell::num(pt.ok ? -pt.field_mode.imag() : kNaN));
    row.push_back(Cell::str(pt.error));
    t.rows.push_back(std::move(row));
    if (pt.ok) any_ok = true;
  }
  write_table(t, cfg.out_format, cfg.out_path);
  return any_ok ? 0 : 3;
}

// Backward error of one root of the monic quartic, relative to the size of
// the evaluated terms.
double quartic_residual(const selforg::QuarticRoots& qr, const selforg::ModelParams& p,
                        std::complex<double> root) {
  const std::complex<double> i(0.0, 1.0);
  const double d = qr.delta_c_eff;
  const double w1sq = qr.omega1 * qr.omega1;
  const std::complex<double> c3 = 2.0 * i * p.kappa;
  const std::complex<double> c2 = -(p.kappa * p.kappa + d * d + w1sq);
  const std::complex<double> c1 = -2.0 * i * p.kappa * w1sq;
  const std::complex<double> c0 =
      w1sq * (p.kappa * p.kappa + d * d) - 2.0 * p.eta * p.eta * d;
  const std::complex<double> z = root;
  const std::complex<double> value = (((z + c3) * z + c2) * z + c1) * z + c0;
  const double scale = std::abs(z * z * z * z) + std::abs(c3 * z * z * z) +
                       std::abs(c2 * z * z) + std::abs(c1 * z) + std::abs(c0);
  return std::abs(value) / std::max(1.0, scale);
}

int cmd_quartic(const RunConfig& cfg) {
  std::vector<double> values = cfg.sweep_values;
  if (values.empty()) values.push_back(cfg.params.eta);
  std::sort(values.begin(), values.end());

  Table t = make_table(cfg, "quartic");
  t.columns = {"eta", "delta_c_eff", "omega1"};
  for (int k = 1; k <= 4; ++k) {
    t.columns.push_back("root" + std::to_string(k) + "_re");
    t.columns.push_back("root" + std::to_string(k) + "_im");
  }
  t.columns.insert(t.columns.end(), {"residual", "lambda1_re", "lambda1_im", "lambda1_ok"});

  bool warned = false;
  for (double eta : values) {
    selforg::ModelParams p = cfg.params;
    p.eta = eta;
    const selforg::QuarticRoots qr = selforg::quartic_roots(p);

    std::vector<Cell> row;
    row.push_back(Cell::num(eta));
    row.push_back(Cell::num(qr.delta_c_eff));
    row.push_back(Cell::num(qr.omega1));
    double residual = 0.0;
    for (const auto& root : qr.roots) {
      row.push_back(Cell::num(root.real()));
      row.push_back(Cell::num(root.imag()));
      residual = std::max(residual, quartic_residual(qr, p, root));
    }
    row.push_back(Cell::num(residual));

    const bool applicable = selforg::lambda1_approx_applicable(p);
    double l1_re = kNaN, l1_im = kNaN;
    try {
      const std::complex<double> l1 = selforg::lambda1_approx(p);
      l1_re = l1.real();
      l1_im = l1.imag();
      if (!applicable && !warned) {
        std::fprintf(stderr,
                     "quartic: lambda1 closed form is outside its dispersive regime "
                     "at eta = %g; treat lambda1 columns as indicative only\n",
                     eta);
        warned = true;
      }
    } catch (const std::domain_error&) {
      // above threshold the expansion has no soft branch to describe
    }
    row.push_back(Cell::num(l1_re));
    row.push_back(Cell::num(l1_im));
    row.push_back(Cell::count(std::isfinite(l1_re) && applicable ? 1 : 0));
    t.rows.push_back(std::move(row));
  }
  write_table(t, cfg.out_format, cfg.out_path);
  return 0;
}

int cmd_phase_diagram(const RunConfig& cfg) {
  if (!cfg.has_u0_range)
    throw ConfigError("phase-diagram requires phase.u0_min and phase.u0_max");
  const std::vector<double> values = sorted_sweep(cfg, "phase-diagram");
  const selforg::SpatialGrid grid(cfg.n_points);
  const auto points = selforg::defect_phase_boundary(cfg.params, grid, cfg.solver, values,
                                                     {cfg.u0_min, cfg.u0_max});

  Table t = make_table(cfg, "phase-diagram");
  t.columns = {"eta", "u0_defect", "eta_c_at_boundary", "found", "probes", "error"};
  bool any_ok = false;
  for (const auto& pt : points) {
    std::vector<Cell> row;
    row.push_back(Cell::num(pt.eta));
    row.push_back(Cell::num(pt.found ? pt.u0_defect : kNaN));
    row.push_back(Cell::num(pt.found ? pt.eta_c_at_boundary : kNaN));
    row.push_back(Cell::count(pt.found ? 1 : 0));
    row.push_back(Cell::count(pt.probes));
    row.push_back(Cell::str(pt.error));
    t.rows.push_back(std::move(row));
    if (pt.found) any_ok = true;
  }
  write_table(t, cfg.out_format, cfg.out_path);
  return any_ok ? 0 : 3;
}

int cmd_depletion(const RunConfig& cfg) {
  const std::vector<double> values = sorted_sweep(cfg, "depletion");
  const selforg::SpatialGrid grid(cfg.n_points);
  const auto points = selforg::depletion_sweep(cfg.params, grid, cfg.solver, values);

  Table t = make_table(cfg, "depletion");
  t.columns = {"eta", "n_prime", "lambda1", "asymptotic", "converged", "error"};
  bool any_ok = false;
  for (const auto& pt : points) {
    std::vector<Cell> row;
    row.push_back(Cell::num(pt.eta));
    row.push_back(Cell::num(pt.n_prime));
    row.push_back(Cell::num(pt.lambda1));
    row.push_back(Cell::num(pt.asymptotic));
    row.push_back(Cell::count(pt.converged ? 1 : 0));
    row.push_back(Cell::str(pt.error));
    t.rows.push_back(std::move(row));
    if (pt.converged && pt.error.empty()) any_ok = true;
  }
  write_table(t, cfg.out_format, cfg.out_path);
  return any_ok ? 0 : 3;
}

int cmd_critical(const RunConfig& cfg) {
  double eta_c = kNaN;
  try {
    eta_c = selforg::critical_eta(cfg.params);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  Table t = make_table(cfg, "critical");
  t.columns = {"eta_c", "delta_c_eff", "omega1"};
  const selforg::QuarticRoots qr = selforg::quartic_roots(cfg.params);
  t.rows.push_back({Cell::num(eta_c), Cell::num(qr.delta_c_eff), Cell::num(qr.omega1)});
  write_table(t, cfg.out_format, cfg.out_path);
  return 0;
}

}  // namespace

int run_subcommand(const std::string& name, const RunConfig& cfg) {
  if (name == "steady") return cmd_steady(cfg);
  if (name == "order-sweep") return cmd_order_sweep(cfg);
  if (name == "spectrum") return cmd_spectrum(cfg);
  if (name == "quartic") return cmd_quartic(cfg);
  if (name == "phase-diagram") return cmd_phase_diagram(cfg);
  if (name == "depletion") return cmd_depletion(cfg);
  if (name == "critical") return cmd_critical(cfg);
  throw ConfigError("unknown subcommand '" + name + "'");
}

}  // namespace cli
