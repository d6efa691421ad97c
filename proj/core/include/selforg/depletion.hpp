#pragma once

#include <string>
#include <vector>

#include "selforg/grid.hpp"
#include "selforg/linear_response.hpp"
#include "selforg/params.hpp"
#include "selforg/state.hpp"
#include "selforg/steady_state.hpp"

namespace selforg {

// Atomic occupation sum over unit-symplectic-norm quasiparticle modes, the
// building block behind quantum_depletion; exposed so analytically solvable
// spectra can cross-validate the normalization. Zero-frequency directions are
// skipped (the cut scales with the spectral radius because gauge zeros are
// defective); a vanishing symplectic norm at finite frequency raises
// std::runtime_error.
double symplectic_mode_sum(const std::vector<BogoliubovMode>& modes,
                           const SpatialGrid& grid,
                           std::vector<std::pair<int, double>>* per_mode = nullptr);

struct DepletionResult {
  double eta = 0.0;
  double n_prime = 0.0;  // noncondensed atoms per total atom number N
  // (mode index into the eigendecomposition, atomic occupation) per
  // positive-norm quasiparticle mode; contributions are nonnegative.
  std::vector<std::pair<int, double>> per_mode;
};

// Quantum depletion of the conservative system (kappa = 0, g = 0 required;
// anything else throws std::domain_error). Quasiparticle modes are selected
// by positive symplectic norm
//   s = <u|u> - <v|v> + |da_+|^2 - |da_-|^2
// with the grid inner product on atomic components and unit weight on field
// components, normalized to s = +1, and N' = sum_k <v_k|v_k> counts atomic
// weight only. Zero-frequency gauge directions are excluded; any other mode
// with vanishing symplectic norm raises std::runtime_error.
DepletionResult quantum_depletion(const SteadyState& state, const ModelParams& p,
                                  const SpatialGrid& grid);

struct DepletionPoint {
  double eta = 0.0;
  double n_prime = 0.0;
  double lambda1 = 0.0;     // soft-mode frequency from the quartic (NaN above eta_c)
  double asymptotic = 0.0;  // 1/(8*lambda1) divergence law (NaN above eta_c)
  bool converged = false;
  std::string error;
};

// Depletion along an eta sweep (warm-started steady-state chain). The
// asymptotic column carries the soft-mode divergence law where defined.
std::vector<DepletionPoint> depletion_sweep(const ModelParams& p,
                                            const SpatialGrid& grid,
                                            const SolverOptions& opts,
                                            const std::vector<double>& eta_values);

}  // namespace selforg
