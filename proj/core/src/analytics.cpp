#include "selforg/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "selforg/observables.hpp"
#include "selforg/parallel.hpp"

namespace selforg {

double critical_eta(const ModelParams& p) {
  p.validate();
  const double denom = p.u0 - 2.0 * p.delta_c;
  if (!(denom > 0.0)) {
    throw std::domain_error("critical_eta: no transition, u0 - 2*delta_c must be > 0");
  }
  const double dd = p.delta_c - 0.5 * p.u0;
  return std::sqrt((dd * dd + p.kappa * p.kappa) / denom) * std::sqrt(1.0 + 2.0 * p.g);
}

double box_spectrum(int n, double g) {
  if (n < 1) throw std::domain_error("box_spectrum: n must be >= 1");
  if (g < 0.0) throw std::domain_error("box_spectrum: g must be >= 0");
  const double n2 = static_cast<double>(n) * n;
  return std::sqrt(n2 * (n2 + 2.0 * g));
}

double delta_c_eff(const ModelParams& p) { return -p.delta_c + 0.5 * p.u0; }

namespace {

std::array<Complex, 4> quartic_coeffs(const ModelParams& p) {
  // monic lambda^4 + c3 lambda^3 + c2 lambda^2 + c1 lambda + c0
  const double dce = delta_c_eff(p);
  const double om12 = 1.0 + 2.0 * p.g;
  const double k2d2 = p.kappa * p.kappa + dce * dce;
  return {Complex{om12 * k2d2 - 2.0 * p.eta * p.eta * dce, 0.0},  // c0
          Complex{0.0, -2.0 * p.kappa * om12},                    // c1
          Complex{-(k2d2 + om12), 0.0},                           // c2
          Complex{0.0, 2.0 * p.kappa}};                           // c3
}

}  // namespace

QuarticRoots quartic_roots(const ModelParams& p) {
  p.validate();
  const auto c = quartic_coeffs(p);
  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  companion(0, 3) = -c[0];
  companion(1, 3) = -c[1];
  companion(2, 3) = -c[2];
  companion(3, 3) = -c[3];
  companion(1, 0) = companion(2, 1) = companion(3, 2) = Complex{1.0, 0.0};
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(companion);
  if (es.info() != Eigen::Success) throw std::runtime_error("quartic_roots: eigensolver failed");

  QuarticRoots out;
  out.delta_c_eff = delta_c_eff(p);
  out.omega1 = std::sqrt(1.0 + 2.0 * p.g);
  for (int i = 0; i < 4; ++i) out.roots[i] = es.eigenvalues()[i];
  std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

Eigen::Matrix4cd restricted_matrix(const ModelParams& p) {
  const double dce = delta_c_eff(p);
  const double om12 = 1.0 + 2.0 * p.g;
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = Complex{0.0, -p.kappa};
  m(0, 1) = dce;
  m(0, 2) = p.eta;
  m(1, 0) = dce;
  m(1, 1) = Complex{0.0, -p.kappa};
  m(2, 3) = -1.0;
  m(3, 1) = -2.0 * p.eta;
  m(3, 2) = -om12;
  return m;
}

double quartic_residual(const ModelParams& p, Complex lambda) {
  const auto c = quartic_coeffs(p);
  const Complex l2 = lambda * lambda;
  const Complex value = l2 * l2 + c[3] * l2 * lambda + c[2] * l2 + c[1] * lambda + c[0];
  const double al = std::abs(lambda);
  double scale = al * al * al * al;
  double alk = 1.0;
  for (int k = 0; k < 4; ++k) {
    scale += std::abs(c[k]) * alk;
    alk *= al;
  }
  return std::abs(value) / std::max(scale, 1e-300);
}

Complex lambda1_approx(const ModelParams& p) {
  const double etac = critical_eta(p);
  const double r = (p.eta / etac) * (p.eta / etac);
  if (r > 1.0 + 1e-12) {
    throw std::domain_error("lambda1_approx: only defined up to the critical pump");
  }
  const double dce = delta_c_eff(p);
  const double om1 = std::sqrt(1.0 + 2.0 * p.g);
  const double re = om1 * std::sqrt(std::max(0.0, 1.0 - r));
  const double im = -p.kappa * om1 * om1 / (dce * dce + p.kappa * p.kappa) * r;
  return Complex{re, im};
}

bool lambda1_approx_applicable(const ModelParams& p) {
  const double dce = delta_c_eff(p);
  return 1.0 + 2.0 * p.g < 0.01 * (dce * dce + p.kappa * p.kappa);
}

double eta_star_gap(const ModelParams& p) {
  const double etac = critical_eta(p);
  const double dce = delta_c_eff(p);
  const double om1 = std::sqrt(1.0 + 2.0 * p.g);
  const double ratio = p.kappa * om1 / (dce * dce + p.kappa * p.kappa);
  return etac * etac * ratio * ratio;
}

double recommended_detuning(const ModelParams& p) { return p.u0 - p.kappa; }

bool defect_criterion_asymptotic(const ModelParams& p) {
  return std::abs(p.u0) > p.kappa;
}

namespace {

double ternary_min(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

bool has_secondary_minimum(const SteadyState& state, const ModelParams& p,
                           const SpatialGrid& grid) {
  if (std::abs(state.theta_op) < 1e-12) return false;
  const AdiabaticPotential pot = adiabatic_potential(state, p, grid);
  const auto V = [&](double th) {
    const double c = std::cos(th);
    return pot.u1 * c + pot.u2 * c * c;
  };
  const double target = state.theta_op >= 0.0 ? M_PI : 0.0;

  // Dense scan for strict discrete minima, then sub-grid refinement. With m
  // even both antinodes are sample points, so a symmetric minimum never
  // straddles two equal-valued cells.
  const int m = 4096;
  const double h = 2.0 * M_PI / m;
  std::vector<double> vals(m);
  for (int j = 0; j < m; ++j) vals[j] = V(h * j);
  const double vscale = std::max({std::abs(pot.u1), std::abs(pot.u2), 1e-300});
  for (int j = 0; j < m; ++j) {
    const double vm = vals[(j - 1 + m) % m];
    const double vp = vals[(j + 1) % m];
    if (!(vals[j] < vm && vals[j] < vp)) continue;
    const double center = h * j;
    const double refined = ternary_min(V, center - h, center + h);
    double d = std::remainder(refined - target, 2.0 * M_PI);
    if (std::abs(d) > 1e-3) continue;
    // strictness: the refined antinode value must sit below its neighborhood
    const double margin = 0.5 * (V(target + 1e-3) + V(target - 1e-3)) - V(target);
    if (margin > 1e-12 * vscale) return true;
  }
  return false;
}

std::vector<DefectBoundaryPoint> defect_phase_boundary(
    const ModelParams& base, const SpatialGrid& grid, const SolverOptions& opts,
    const std::vector<double>& eta_values, std::pair<double, double> u0_range) {
  base.validate();
  opts.validate();
  if (!(u0_range.first < u0_range.second) || !(u0_range.second < 0.0)) {
    throw std::invalid_argument(
        "defect_phase_boundary: need u0_range.first < u0_range.second < 0");
  }
  std::vector<DefectBoundaryPoint> out(eta_values.size());

  parallel_for(static_cast<int>(eta_values.size()), [&](int i) {
    DefectBoundaryPoint& pt = out[i];
    pt.eta = eta_values[i];
    int probes = 0;
    const auto classify = [&](double u0v) -> std::optional<bool> {
      ++probes;
      const ModelParams q = base.with_u0(u0v).with_eta(pt.eta);
      try {
        const SteadyState st = solve_steady(q, grid, opts);
        if (!st.converged) return std::nullopt;
        return has_secondary_minimum(st, q, grid);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    };

    double lo = u0_range.first;
    double hi = u0_range.second;
    const auto c_lo = classify(lo);
    const auto c_hi = classify(hi);
    if (!c_lo || !c_hi) {
      pt.probes = probes;
      pt.error = "bracket probe did not converge";
      return;
    }
    if (*c_lo == *c_hi) {
      pt.probes = probes;
      pt.error = "no defect boundary inside bracket";
      return;
    }
    while (hi - lo > std::max(0.1, 1e-3 * std::abs(0.5 * (lo + hi)))) {
      const double width = hi - lo;
      std::optional<bool> c_mid;
      double mid = 0.5 * (lo + hi);
      for (const double shift : {0.0, -0.1 * width, 0.1 * width}) {
        mid = 0.5 * (lo + hi) + shift;
        c_mid = classify(mid);
        if (c_mid) break;
      }
      if (!c_mid) {
        pt.probes = probes;
        pt.error = "bisection probe did not converge";
        return;
      }
      if (*c_mid == *c_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    pt.u0_defect = 0.5 * (lo + hi);
    pt.found = true;
    pt.probes = probes;
    try {
      pt.eta_c_at_boundary = critical_eta(base.with_u0(pt.u0_defect));
    } catch (const std::domain_error&) {
      pt.eta_c_at_boundary = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return out;
}

}  // namespace selforg
