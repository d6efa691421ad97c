#include "selforg/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace selforg {

SpatialGrid::SpatialGrid(int n_points) : n_(n_points) {
  if (n_points < 2) throw std::invalid_argument("SpatialGrid: n_points must be >= 2");
  theta_.resize(n_);
  cos_theta_.resize(n_);
  cos2_theta_.resize(n_);
  const double h = 2.0 * M_PI / n_;
  for (int j = 0; j < n_; ++j) {
    theta_[j] = h * j;
    cos_theta_[j] = std::cos(theta_[j]);
    cos2_theta_[j] = cos_theta_[j] * cos_theta_[j];
  }
}

}  // namespace selforg
