#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selforg/grid.hpp"
#include "selforg/params.hpp"
#include "selforg/state.hpp"
#include "selforg/steady_state.hpp"

namespace selforg {

// Non-Hermitian Bogoliubov matrix M of the linearized coupled equations,
// d/dt (da_a, da_s, df, dg)^T = -i M (...)^T, in the quadrature basis
//   da_a = (da - conj(da))/(2i) + ... (antisymmetric field quadrature),
//   da_s = symmetric field quadrature,
//   df_j = symmetric, dg_j = antisymmetric condensate quadratures on the grid.
// Dimension 2*n + 2: indices 0 = da_a, 1 = da_s, 2..n+1 = df, n+2..2n+1 = dg.
struct BogoliubovMatrix {
  Eigen::MatrixXcd m;
  ModelParams params;
  SteadyState state;  // the (phase-fixed) state the matrix was built around
  int n_points = 0;
  double norm = 0.0;  // infinity norm, reference scale for tolerances
};

enum class ModeKind { condensate, field };

struct BogoliubovMode {
  Complex omega;  // eigenvalue, omega = nu - i*gamma
  double nu = 0.0;
  double gamma = 0.0;
  Eigen::VectorXcd vector;  // unit Euclidean norm eigenvector
  ModeKind kind = ModeKind::condensate;
  double field_weight = 0.0;  // field-quadrature share, atomic part carrying weight 1/n
  std::optional<int> paired_with;  // index of the -conj(omega) partner
  bool pairing_flagged = false;    // set when no partner within tolerance
};

// Builds M around a converged steady state. The wavefunction is first rotated
// so that <1|phi0> is real and positive; a residually complex phi0 or a
// non-converged state is refused with std::invalid_argument.
BogoliubovMatrix build_matrix(const SteadyState& state, const ModelParams& p,
                              const SpatialGrid& grid);

// Full dense eigendecomposition. Each mode's residual ||M v - omega v|| is
// checked against 1e-8 * ||M||; violations throw std::runtime_error.
std::vector<BogoliubovMode> eigendecompose(const BogoliubovMatrix& bm);

// Fills kind/field_weight, sorts (condensate block then field block, nu
// descending within each), and matches the omega -> -conj(omega) pairs
// greedily. Modes with |Re omega| above tolerance but no partner are flagged.
void classify_and_pair(std::vector<BogoliubovMode>& modes, double matrix_norm);

struct SpectrumPoint {
  double eta = 0.0;
  SweepRecord steady;                    // observables of the underlying solve
  std::vector<Complex> condensate_modes; // tracked branches, lowest nu first
  Complex field_mode{0.0, 0.0};          // tracked field-dominated branch
  bool ok = false;
  std::string error;
};

// Spectrum along an eta sweep. Steady states warm-start sequentially; branches
// are continuity-tracked between adjacent points by eigenvector overlap.
// Zero/gauge modes never enter the tracked listing.
std::vector<SpectrumPoint> spectrum_sweep(const ModelParams& p,
                                          const SpatialGrid& grid,
                                          const SolverOptions& opts,
                                          const std::vector<double>& eta_values,
                                          int n_lowest);

}  // namespace selforg
