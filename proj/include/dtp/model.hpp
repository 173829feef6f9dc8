#pragma once

#include <complex>

#include "dtp/types.hpp"

namespace dtp {

/// Delayed Maier-Stein vector field and its small-delay analytical reduction.
///
/// The dynamics are
///   du/dt =  u(t-tau) - u^3 - beta*u*v^2
///   dv/dt = -v(t-tau) - u^2*v
/// with stable fixed points A=(-1,0), B=(1,0) and a saddle at the origin.

/// F(x, x_del): x carries the instantaneous (u,v), x_del the delayed pair.
Vec2 drift(const Vec2& x, const Vec2& x_del, const ModelParams& p);

/// Jacobian of F with respect to the instantaneous argument.
Mat2 drift_jacobian_now(const Vec2& x, const Vec2& x_del, const ModelParams& p);

/// Jacobian of F with respect to the delayed argument (constant: diag(1,-1)).
Mat2 drift_jacobian_delayed(const Vec2& x, const Vec2& x_del,
                            const ModelParams& p);

struct FixedPoints {
  Vec2 a;       // (-1, 0)
  Vec2 b;       // (+1, 0)
  Vec2 saddle;  // origin
};
FixedPoints fixed_points();

/// Small-delay reduced drift, valid for beta = 1:
///   ((1-tau)(u - u^3 - u v^2), (1+tau)(-v - u^2 v)).
Vec2 reduced_drift(const Vec2& x, const ModelParams& p);

/// Quasipotential-like function of the reduced model (beta = 1, tau != 1):
///   W(u,v) = (u^4/2 - u^2)/(2(1-tau)) + v^2/(2(1+tau)) + u^2 v^2/(1-tau^2).
Real quasi_potential(const Vec2& x, const ModelParams& p);

/// Transverse stability coefficient of the on-axis geometric action for the
/// left segment (u <= 0). Positive: on-axis perturbations raise the action.
Real transverse_m2(Real u, const ModelParams& p);

/// Expansion of the on-axis geometric action in powers of v at abscissa u:
/// s(u,v) ~= m0 + m2 v^2.
struct TransverseStability {
  Real m0;  // on-axis geometric action of the segment, >= 0
  Real m2;  // transverse stability coefficient
};
TransverseStability transverse_stability(Real u, const ModelParams& p);

/// True iff some u <= 0 has m2(u) < 0, i.e. tau > 1.
bool on_axis_unstable(const ModelParams& p);

/// Root with largest real part of the characteristic equations at A or B:
///   lambda =  exp(-lambda*tau) - 3   (u-branch)
///   lambda = -exp(-lambda*tau) - 1   (v-branch)
/// Found by a coarse grid scan over Re in [-10,2], Im in [0,20] refined by
/// damped Newton iteration to residual 1e-10; returns the branch-wise maximum.
std::complex<Real> rightmost_char_root(const Vec2& point, const ModelParams& p);

}  // namespace dtp
