#pragma once

#include <Eigen/Dense>

namespace selforg {

// FFT workspace for periodic spectral derivatives on an n-point grid.
// Instances own their FFTW plans and scratch buffers; use one instance per
// thread. Plan creation is serialized internally.
class Spectral {
 public:
  explicit Spectral(int n);
  ~Spectral();
  Spectral(const Spectral&) = delete;
  Spectral& operator=(const Spectral&) = delete;

  int n() const { return n_; }

  // out = -phi'' (the kinetic term), exact for band-limited input.
  void kinetic(const Eigen::VectorXcd& phi, Eigen::VectorXcd& out);

  // phi <- F^{-1} exp(-k^2 * tau) F phi (imaginary-time kinetic half map).
  void kinetic_exp(Eigen::VectorXcd& phi, double tau);

  // Squared wavenumbers in FFT order (0, 1, ..., n/2, -(n/2-1), ..., -1)^2.
  const Eigen::VectorXd& ksq() const { return ksq_; }

  // Dense symmetric matrix of the spectral -d^2/dtheta^2, assembled from the
  // circulant kernel K_{jl} = (1/n) sum_m k_m^2 cos(2*pi*m*(j-l)/n).
  static Eigen::MatrixXd dense_kinetic(int n);

 private:
  int n_;
  Eigen::VectorXd ksq_;
  void* plan_fwd_;
  void* plan_bwd_;
  void* buf_;
};

}  // namespace selforg
