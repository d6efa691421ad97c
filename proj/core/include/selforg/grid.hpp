#pragma once

#include <Eigen/Dense>

namespace selforg {

// Uniform periodic grid theta_j = 2*pi*j/n on [0, 2*pi). Quadrature is the
// plain Riemann sum with weight 1/n, i.e. the d(theta)/(2*pi) average; it is
// exact for trigonometric polynomials below the Nyquist order.
class SpatialGrid {
 public:
  explicit SpatialGrid(int n_points = 200);

  int n() const { return n_; }
  double weight() const { return 1.0 / n_; }
  const Eigen::VectorXd& theta() const { return theta_; }
  const Eigen::VectorXd& cos_theta() const { return cos_theta_; }
  const Eigen::VectorXd& cos2_theta() const { return cos2_theta_; }

 private:
  int n_;
  Eigen::VectorXd theta_;
  Eigen::VectorXd cos_theta_;
  Eigen::VectorXd cos2_theta_;
};

}  // namespace selforg
