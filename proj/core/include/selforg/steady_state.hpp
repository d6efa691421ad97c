#pragma once

#include <string>
#include <vector>

#include "selforg/grid.hpp"
#include "selforg/observables.hpp"
#include "selforg/params.hpp"
#include "selforg/state.hpp"

namespace selforg {

struct SolverOptions {
  double dtau = 1e-3;          // imaginary-time step (upper bound, see below)
  long max_iter = 1000000;     // total iteration budget
  double tol_psi = 1e-10;      // step-to-step wavefunction change tolerance
  double tol_mu = 1e-10;       // relative residual tolerance on H phi = mu phi
  double seed_epsilon = 1e-2;  // amplitude of the cos(theta) symmetry-breaking seed
  int seed_sign = +1;          // selects the theta = 0 (+1) or theta = pi (-1) branch

  void validate() const;  // throws std::invalid_argument
};

// Imaginary-time propagation of the coupled condensate-cavity equations with
// the field eliminated adiabatically once per step. Strang splitting
// (half potential, spectral kinetic, half potential), renormalization after
// every step. The effective step is clamped when the potential is stiff, and
// stagnation triggers step halving followed by a self-consistent
// diagonalization polish; a state that still misses the tolerances is
// returned with converged = false and the last iterate.
SteadyState solve_steady(const ModelParams& p, const SpatialGrid& grid,
                         const SolverOptions& opts);

// Warm-started variant; `initial` is renormalized and reseeded before use.
SteadyState solve_steady(const ModelParams& p, const SpatialGrid& grid,
                         const SolverOptions& opts, const Wavefunction& initial);

// mu = Re <phi| H[phi, a] |phi>.
double chemical_potential(const Wavefunction& phi, const CavityAmplitude& a,
                          const ModelParams& p, const SpatialGrid& grid);

// One row of a parameter sweep for tabular output.
struct SweepRecord {
  double eta = 0.0;
  double theta_op = 0.0;
  double bunching = 0.0;
  double mu = 0.0;
  double photons_per_atom = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  long iterations = 0;
  double residual = 0.0;
  bool converged = false;
  std::string error;  // empty on success
};

// Sequential sweep over pump strengths; each solve warm-starts from the
// previous wavefunction plus a fresh symmetry-breaking seed.
std::vector<SweepRecord> sweep_eta(const ModelParams& p, const SpatialGrid& grid,
                                   const SolverOptions& opts,
                                   const std::vector<double>& eta_values);

}  // namespace selforg
