#include "selforg/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "selforg/spectral.hpp"

namespace selforg {

Complex inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& h,
                      const SpatialGrid& grid) {
  if (f.size() != grid.n() || h.size() != grid.n()) {
    throw std::invalid_argument("inner_product: size mismatch with grid");
  }
  return f.dot(h) * grid.weight();
}

double wf_norm(const Wavefunction& phi, const SpatialGrid& grid) {
  return std::sqrt(std::real(inner_product(phi, phi, grid)));
}

void normalize(Wavefunction& phi, const SpatialGrid& grid) {
  const double nrm = wf_norm(phi, grid);
  if (!(nrm > 0.0)) throw std::invalid_argument("normalize: zero wavefunction");
  phi /= nrm;
}

double order_parameter(const Wavefunction& phi, const SpatialGrid& grid) {
  if (phi.size() != grid.n()) throw std::invalid_argument("order_parameter: size mismatch");
  double acc = 0.0;
  for (int j = 0; j < grid.n(); ++j) acc += grid.cos_theta()[j] * std::norm(phi[j]);
  return acc * grid.weight();
}

double bunching_parameter(const Wavefunction& phi, const SpatialGrid& grid) {
  if (phi.size() != grid.n()) throw std::invalid_argument("bunching_parameter: size mismatch");
  double acc = 0.0;
  for (int j = 0; j < grid.n(); ++j) acc += grid.cos2_theta()[j] * std::norm(phi[j]);
  return acc * grid.weight();
}

CavityAmplitude adiabatic_field(const Wavefunction& phi, const ModelParams& p,
                                const SpatialGrid& grid) {
  const double theta_op = order_parameter(phi, grid);
  const double bunching = bunching_parameter(phi, grid);
  const Complex denom{p.delta_c - p.u0 * bunching, p.kappa};
  if (std::abs(denom) == 0.0) {
    throw std::domain_error("adiabatic_field: resonant denominator (kappa = 0, delta_c = u0*B)");
  }
  return CavityAmplitude{p.eta * theta_op / denom};
}

AdiabaticPotential adiabatic_potential(const SteadyState& state, const ModelParams& p,
                                       const SpatialGrid& grid) {
  AdiabaticPotential pot;
  pot.u1 = 2.0 * p.eta * state.a0.a.real();
  pot.u2 = p.u0 * std::norm(state.a0.a);
  pot.samples.resize(grid.n());
  for (int j = 0; j < grid.n(); ++j) {
    pot.samples[j] = pot.u1 * grid.cos_theta()[j] + pot.u2 * grid.cos2_theta()[j];
  }
  return pot;
}

Eigen::VectorXcd gp_rhs(const Wavefunction& phi, const CavityAmplitude& a,
                        const ModelParams& p, const SpatialGrid& grid) {
  Spectral spectral(grid.n());
  return gp_rhs(phi, a, p, grid, spectral);
}

Eigen::VectorXcd gp_rhs(const Wavefunction& phi, const CavityAmplitude& a,
                        const ModelParams& p, const SpatialGrid& grid,
                        Spectral& spectral) {
  if (phi.size() != grid.n()) throw std::invalid_argument("gp_rhs: size mismatch");
  Eigen::VectorXcd out;
  spectral.kinetic(phi, out);
  const double i0 = std::norm(a.a);
  const double re_a = a.a.real();
  for (int j = 0; j < grid.n(); ++j) {
    const double v = p.u0 * i0 * grid.cos2_theta()[j] +
                     2.0 * p.eta * re_a * grid.cos_theta()[j] + p.g * std::norm(phi[j]);
    out[j] += v * phi[j];
  }
  return out;
}

}  // namespace selforg
