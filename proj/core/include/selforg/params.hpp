#pragma once

namespace selforg {

// Collective coupling constants in recoil units (omega_R = 1, lengths in
// units of 1/k so the lattice period is 2*pi). All couplings carry the
// atom-number scaling already: u0 = N*U0, g = N*g_c/lambda, eta = sqrt(N)*eta_t.
struct ModelParams {
  double u0 = 0.0;       // light shift per photon, < 0 for red detuning
  double g = 0.0;        // s-wave collision energy at uniform density, >= 0
  double delta_c = 0.0;  // pump-cavity detuning Delta_C
  double kappa = 0.0;    // cavity linewidth (HWHM), >= 0
  double eta = 0.0;      // transverse pump strength, >= 0

  // Throws std::invalid_argument on non-finite entries, negative g/kappa/eta.
  void validate() const;

  ModelParams with_eta(double eta_value) const;
  ModelParams with_u0(double u0_value) const;
};

}  // namespace selforg
