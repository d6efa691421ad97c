#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "selforg/grid.hpp"
#include "selforg/params.hpp"
#include "selforg/state.hpp"
#include "selforg/steady_state.hpp"

namespace selforg {

// Critical pump strength of the self-organization transition,
//   eta_c = sqrt(((delta_c - u0/2)^2 + kappa^2) / (u0 - 2*delta_c)) * sqrt(1 + 2g).
// Throws std::domain_error when u0 - 2*delta_c <= 0 (no transition).
double critical_eta(const ModelParams& p);

// Collective spectrum of the uniform contact gas, Omega_n = sqrt(n^2(n^2 + 2g)).
// Throws std::domain_error for n < 1.
double box_spectrum(int n, double g);

// Effective detuning delta_c_eff = -delta_c + u0/2 seen by the uniform phase.
double delta_c_eff(const ModelParams& p);

struct QuarticRoots {
  std::array<Complex, 4> roots;  // sorted by Re descending, then Im descending
  double delta_c_eff = 0.0;
  double omega1 = 0.0;  // Omega_1 = sqrt(1 + 2g)
};

// Roots of the coupled cos(theta)-sector dispersion relation
//   (lambda^2 - Omega_1^2) ((i*kappa + lambda)^2 - delta_c_eff^2)
//     - 2*eta^2*delta_c_eff = 0,
// computed as companion-matrix eigenvalues.
QuarticRoots quartic_roots(const ModelParams& p);

// The 4x4 restriction of the Bogoliubov matrix to the
// (da_a, da_s, cos-theta f, cos-theta g) subspace of the uniform phase;
// its eigenvalues are the quartic roots.
Eigen::Matrix4cd restricted_matrix(const ModelParams& p);

// Normalized backward error |p(lambda)| / sum_k |c_k| |lambda|^k of a root.
double quartic_residual(const ModelParams& p, Complex lambda);

// Soft-mode eigenvalue in the dispersive regime Omega_1^2 << kappa^2 + delta_c_eff^2:
//   lambda_1 = Omega_1 sqrt(1 - eta^2/eta_c^2)
//              - i * kappa * Omega_1^2/(delta_c_eff^2 + kappa^2) * eta^2/eta_c^2.
// Throws std::domain_error above threshold.
Complex lambda1_approx(const ModelParams& p);

// True when the dispersive-regime expansion behind lambda1_approx applies.
bool lambda1_approx_applicable(const ModelParams& p);

// Width of the cavity-cooling window in eta^2:
//   eta_c^2 - eta_*^2 = eta_c^2 * (kappa * Omega_1 / (delta_c_eff^2 + kappa^2))^2.
double eta_star_gap(const ModelParams& p);

// Detuning delta_c = u0 - kappa that keeps the organized phase optimally damped.
double recommended_detuning(const ModelParams& p);

// Deep-lattice defect condition |u0| > kappa.
bool defect_criterion_asymptotic(const ModelParams& p);

// Whether the self-consistent potential of an organized state has a strict
// local minimum at the antinode complementary to the condensate site,
// determined by a dense scan of V(theta) with sub-grid refinement.
// Equivalent to the closed form |delta_c - u0*B| < |Theta|*|u0|.
bool has_secondary_minimum(const SteadyState& state, const ModelParams& p,
                           const SpatialGrid& grid);

struct DefectBoundaryPoint {
  double eta = 0.0;
  double u0_defect = 0.0;       // critical light shift (negative)
  double eta_c_at_boundary = 0.0;  // self-organization threshold at u0_defect
  bool found = false;
  int probes = 0;
  std::string error;
};

// Traces the defect boundary u0(eta) by bisection inside u0_range
// (u0_range.first < u0_range.second < 0), one fresh steady-state solve per
// probe. Points whose bracket ends classify identically are reported with
// found = false. eta columns run concurrently.
std::vector<DefectBoundaryPoint> defect_phase_boundary(
    const ModelParams& base, const SpatialGrid& grid, const SolverOptions& opts,
    const std::vector<double>& eta_values, std::pair<double, double> u0_range);

}  // namespace selforg
