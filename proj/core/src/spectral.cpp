#include "selforg/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

#include "selforg/state.hpp"

namespace selforg {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Spectral::Spectral(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Spectral: n must be >= 2");
  ksq_.resize(n_);
  for (int m = 0; m < n_; ++m) {
    const int k = (m <= n_ / 2) ? m : m - n_;
    ksq_[m] = static_cast<double>(k) * k;
  }
  buf_ = fftw_malloc(sizeof(fftw_complex) * n_);
  if (!buf_) throw std::bad_alloc();
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto* b = static_cast<fftw_complex*>(buf_);
  plan_fwd_ = fftw_plan_dft_1d(n_, b, b, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(n_, b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Spectral::~Spectral() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

void Spectral::kinetic(const Eigen::VectorXcd& phi, Eigen::VectorXcd& out) {
  if (phi.size() != n_) throw std::invalid_argument("Spectral::kinetic: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (int j = 0; j < n_; ++j) {
    b[j][0] = phi[j].real();
    b[j][1] = phi[j].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (int m = 0; m < n_; ++m) {
    b[m][0] *= ksq_[m];
    b[m][1] *= ksq_[m];
  }
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  out.resize(n_);
  const double inv_n = 1.0 / n_;
  for (int j = 0; j < n_; ++j) out[j] = Complex{b[j][0] * inv_n, b[j][1] * inv_n};
}

void Spectral::kinetic_exp(Eigen::VectorXcd& phi, double tau) {
  if (phi.size() != n_) throw std::invalid_argument("Spectral::kinetic_exp: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (int j = 0; j < n_; ++j) {
    b[j][0] = phi[j].real();
    b[j][1] = phi[j].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (int m = 0; m < n_; ++m) {
    const double f = std::exp(-ksq_[m] * tau);
    b[m][0] *= f;
    b[m][1] *= f;
  }
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  const double inv_n = 1.0 / n_;
  for (int j = 0; j < n_; ++j) phi[j] = Complex{b[j][0] * inv_n, b[j][1] * inv_n};
}

Eigen::MatrixXd Spectral::dense_kinetic(int n) {
  if (n < 2) throw std::invalid_argument("Spectral::dense_kinetic: n must be >= 2");
  // Circulant kernel; long double accumulation keeps the large-k cancellations
  // below the spectral tolerance.
  Eigen::VectorXd kernel(n);
  for (int d = 0; d < n; ++d) {
    long double acc = 0.0L;
    for (int m = 0; m < n; ++m) {
      const int k = (m <= n / 2) ? m : m - n;
      const long double ang = 2.0L * M_PI * ((static_cast<long>(m) * d) % n) / n;
      acc += static_cast<long double>(k) * k * std::cos(ang);
    }
    kernel[d] = static_cast<double>(acc / n);
  }
  Eigen::MatrixXd K(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) K(j, l) = kernel[(j - l + n) % n];
  return K;
}

}  // namespace selforg
