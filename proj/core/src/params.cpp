#include "selforg/params.hpp"

#include <cmath>
#include <stdexcept>

namespace selforg {

void ModelParams::validate() const {
  if (!std::isfinite(u0) || !std::isfinite(g) || !std::isfinite(delta_c) ||
      !std::isfinite(kappa) || !std::isfinite(eta)) {
    throw std::invalid_argument("ModelParams: non-finite entry");
  }
  if (g < 0.0) throw std::invalid_argument("ModelParams: g must be >= 0");
  if (kappa < 0.0) throw std::invalid_argument("ModelParams: kappa must be >= 0");
  if (eta < 0.0) throw std::invalid_argument("ModelParams: eta must be >= 0");
}

ModelParams ModelParams::with_eta(double eta_value) const {
  ModelParams q = *this;
  q.eta = eta_value;
  return q;
}

ModelParams ModelParams::with_u0(double u0_value) const {
  ModelParams q = *this;
  q.u0 = u0_value;
  return q;
}

}  // namespace selforg
