#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace dtp {

using Real = double;
using Index = Eigen::Index;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using ArrayX = Eigen::ArrayXd;
using ArrayX2 = Eigen::Array<Real, Eigen::Dynamic, 2>;

/// One problem instance: delay tau, non-conservation beta, noise intensity
/// epsilon. The diffusion tensor is the 2x2 identity; epsilon only enters
/// stochastic operations.
struct ModelParams {
  Real tau = 0.0;
  Real beta = 1.0;
  Real epsilon = 0.02;

  void validate() const {
    if (!(tau >= 0.0)) throw std::invalid_argument("tau: must be >= 0");
    if (!(beta > 0.0)) throw std::invalid_argument("beta: must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon: must be > 0");
  }

  // Reduced-model operations (reduced_drift, quasi_potential, m2, ...) are
  // stated for the conservative case and are singular at tau = 1.
  void require_reduced() const {
    validate();
    if (beta != 1.0)
      throw std::invalid_argument("beta: reduced model requires beta = 1");
    if (tau == 1.0)
      throw std::invalid_argument("tau: reduced model is singular at tau = 1");
  }
};

}  // namespace dtp
