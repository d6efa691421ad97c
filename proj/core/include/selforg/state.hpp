#pragma once

#include <complex>

#include <Eigen/Dense>

namespace selforg {

using Complex = std::complex<double>;

// Condensate wavefunction sampled on a SpatialGrid, normalized so that the
// grid average of |phi|^2 is 1 (single-particle normalization per atom).
using Wavefunction = Eigen::VectorXcd;

// Scaled cavity field alpha/sqrt(N); |a|^2 is the photon number per atom.
struct CavityAmplitude {
  Complex a{0.0, 0.0};
  double photons_per_atom() const { return std::norm(a); }
};

// Converged (or best-effort) self-consistent condensate + field pair.
struct SteadyState {
  Wavefunction phi0;
  CavityAmplitude a0;
  double mu = 0.0;                // chemical potential
  double theta_op = 0.0;          // order parameter <cos(theta)>
  double bunching = 0.0;          // bunching parameter <cos^2(theta)>
  double photons_per_atom = 0.0;  // |a0|^2
  long iterations = 0;
  double residual = 0.0;          // ||H phi - mu phi||_inf at exit
  bool converged = false;
};

// Self-consistent optical potential u1*cos(theta) + u2*cos^2(theta).
struct AdiabaticPotential {
  double u1 = 0.0;
  double u2 = 0.0;
  Eigen::VectorXd samples;  // potential on the grid
};

}  // namespace selforg
