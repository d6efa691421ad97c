#pragma once

#include "selforg/grid.hpp"
#include "selforg/params.hpp"
#include "selforg/state.hpp"

namespace selforg {

class Spectral;

// Grid inner product <f|h> = (1/n) sum_j conj(f_j) h_j.
// Throws std::invalid_argument on size mismatch.
Complex inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& h,
                      const SpatialGrid& grid);

double wf_norm(const Wavefunction& phi, const SpatialGrid& grid);

// Rescales phi in place to unit norm; throws on a zero vector.
void normalize(Wavefunction& phi, const SpatialGrid& grid);

// Order parameter Theta = <phi|cos(theta)|phi>, in [-1, 1].
double order_parameter(const Wavefunction& phi, const SpatialGrid& grid);

// Bunching parameter B = <phi|cos^2(theta)|phi>, in [Theta^2, 1].
double bunching_parameter(const Wavefunction& phi, const SpatialGrid& grid);

// Adiabatically eliminated cavity amplitude
//   a = eta * Theta / (delta_c - u0 * B + i * kappa).
// Throws std::domain_error when the denominator vanishes (kappa = 0 and
// delta_c = u0 * B).
CavityAmplitude adiabatic_field(const Wavefunction& phi, const ModelParams& p,
                                const SpatialGrid& grid);

// Lattice depths u1 = 2*eta*Re(a0), u2 = u0*|a0|^2 and the sampled potential.
AdiabaticPotential adiabatic_potential(const SteadyState& state,
                                       const ModelParams& p,
                                       const SpatialGrid& grid);

// Right-hand side H[phi, a] phi of the Gross-Pitaevskii equation,
//   H = -d^2/dtheta^2 + u0|a|^2 cos^2(theta) + 2 eta Re(a) cos(theta) + g|phi|^2,
// with the second derivative evaluated spectrally.
Eigen::VectorXcd gp_rhs(const Wavefunction& phi, const CavityAmplitude& a,
                        const ModelParams& p, const SpatialGrid& grid);

// Same, reusing a caller-owned transform workspace (one per thread).
Eigen::VectorXcd gp_rhs(const Wavefunction& phi, const CavityAmplitude& a,
                        const ModelParams& p, const SpatialGrid& grid,
                        Spectral& spectral);

}  // namespace selforg
