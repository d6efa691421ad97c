#include "selforg/depletion.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "selforg/analytics.hpp"
#include "selforg/linear_response.hpp"
#include "selforg/observables.hpp"

namespace selforg {

namespace {

constexpr double kZeroFreqCut = 1e-6;   // gauge directions and soft-mode truncation
constexpr double kNormTol = 1e-9;       // symplectic-degeneracy guard

}  // namespace

double symplectic_mode_sum(const std::vector<BogoliubovMode>& modes,
                           const SpatialGrid& grid,
                           std::vector<std::pair<int, double>>* per_mode) {
  const int n = grid.n();
  // Gauge zeros are defective, so the eigensolver reports them split
  // proportionally to sqrt(eps * ||M||); the exclusion cut scales with the
  // spectral radius, with the same margin as the branch-tracking cut.
  double rho = 0.0;
  for (const BogoliubovMode& mode : modes) rho = std::max(rho, std::abs(mode.omega));
  const double eps = std::numeric_limits<double>::epsilon();
  const double zero_cut = std::max(kZeroFreqCut, 300.0 * std::sqrt(eps * std::max(1.0, rho)));
  double total = 0.0;
  for (int idx = 0; idx < static_cast<int>(modes.size()); ++idx) {
    const BogoliubovMode& mode = modes[idx];
    if (mode.vector.size() != 2 * n + 2) {
      throw std::invalid_argument("symplectic_mode_sum: vector does not match grid");
    }
    if (std::abs(mode.omega) < zero_cut) continue;
    const Complex da_p = 0.5 * (mode.vector[1] + mode.vector[0]);
    const Complex da_m = 0.5 * (mode.vector[1] - mode.vector[0]);
    double uu = 0.0;
    double vv = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex u = 0.5 * (mode.vector[2 + j] - mode.vector[n + 2 + j]);
      const Complex v = 0.5 * (mode.vector[2 + j] + mode.vector[n + 2 + j]);
      uu += std::norm(u);
      vv += std::norm(v);
    }
    uu *= grid.weight();
    vv *= grid.weight();
    const double s = uu - vv + std::norm(da_p) - std::norm(da_m);
    if (std::abs(s) < kNormTol) {
      throw std::runtime_error(
          "symplectic_mode_sum: vanishing symplectic norm at finite frequency");
    }
    if (s < 0.0) continue;  // the -conj(omega) partner of a physical mode
    const double occupation = vv / s;
    if (per_mode) per_mode->emplace_back(idx, occupation);
    total += occupation;
  }
  return total;
}

DepletionResult quantum_depletion(const SteadyState& state, const ModelParams& p,
                                  const SpatialGrid& grid) {
  p.validate();
  if (p.kappa != 0.0 || p.g != 0.0) {
    throw std::domain_error(
        "quantum_depletion: only the conservative noninteracting regime "
        "(kappa = 0, g = 0) is supported");
  }
  const BogoliubovMatrix bm = build_matrix(state, p, grid);
  const auto modes = eigendecompose(bm);
  DepletionResult out;
  out.eta = p.eta;
  out.n_prime = symplectic_mode_sum(modes, grid, &out.per_mode);
  return out;
}

std::vector<DepletionPoint> depletion_sweep(const ModelParams& p, const SpatialGrid& grid,
                                            const SolverOptions& opts,
                                            const std::vector<double>& eta_values) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double etac = nan;
  try {
    etac = critical_eta(p);
  } catch (const std::domain_error&) {
    // no transition: the lambda1/asymptotic columns stay defined everywhere
  }

  std::vector<DepletionPoint> out;
  out.reserve(eta_values.size());
  Wavefunction warm;
  for (const double eta : eta_values) {
    DepletionPoint pt;
    pt.eta = eta;
    pt.lambda1 = nan;
    pt.asymptotic = nan;
    const ModelParams q = p.with_eta(eta);
    if (std::isnan(etac) || eta < etac) {
      try {
        const QuarticRoots qr = quartic_roots(q);
        double lmin = std::numeric_limits<double>::infinity();
        for (const Complex& root : qr.roots) {
          if (root.real() > 1e-9 && std::abs(root.imag()) < 1e-9) {
            lmin = std::min(lmin, root.real());
          }
        }
        if (std::isfinite(lmin)) {
          pt.lambda1 = lmin;
          pt.asymptotic = 1.0 / (8.0 * lmin);
        }
      } catch (const std::exception&) {
        // leave NaN
      }
    }
    try {
      const SteadyState st = solve_steady(q, grid, opts, warm);
      warm = st.phi0;
      pt.converged = st.converged;
      if (st.converged) {
        pt.n_prime = quantum_depletion(st, q, grid).n_prime;
      } else {
        pt.error = "steady state did not converge";
      }
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace selforg
