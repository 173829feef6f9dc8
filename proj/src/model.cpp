#include "dtp/model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dtp {

Vec2 drift(const Vec2& x, const Vec2& x_del, const ModelParams& p) {
  const Real u = x[0], v = x[1];
  return {x_del[0] - u * u * u - p.beta * u * v * v,
          -x_del[1] - u * u * v};
}

Mat2 drift_jacobian_now(const Vec2& x, const Vec2& /*x_del*/,
                        const ModelParams& p) {
  const Real u = x[0], v = x[1];
  Mat2 j;
  j << -3.0 * u * u - p.beta * v * v, -2.0 * p.beta * u * v,
       -2.0 * u * v,                  -u * u;
  return j;
}

Mat2 drift_jacobian_delayed(const Vec2&, const Vec2&, const ModelParams&) {
  Mat2 j;
  j << 1.0, 0.0,
       0.0, -1.0;
  return j;
}

FixedPoints fixed_points() {
  return {Vec2(-1.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 0.0)};
}

Vec2 reduced_drift(const Vec2& x, const ModelParams& p) {
  p.require_reduced();
  const Real u = x[0], v = x[1];
  return {(1.0 - p.tau) * (u - u * u * u - u * v * v),
          (1.0 + p.tau) * (-v - u * u * v)};
}

Real quasi_potential(const Vec2& x, const ModelParams& p) {
  p.require_reduced();
  const Real u = x[0], v = x[1];
  const Real u2 = u * u, v2 = v * v;
  return (0.5 * u2 * u2 - u2) / (2.0 * (1.0 - p.tau)) +
         v2 / (2.0 * (1.0 + p.tau)) + u2 * v2 / (1.0 - p.tau * p.tau);
}

Real transverse_m2(Real u, const ModelParams& p) {
  p.require_reduced();
  if (u > 0.0)
    throw std::invalid_argument(
        "u: m2 is exposed for the left segment only (u <= 0)");
  const Real core = 1.0 / (2.0 * (1.0 + p.tau)) +
                    u * u / (1.0 - p.tau * p.tau);
  return p.tau < 1.0 ? core : -core;
}

TransverseStability transverse_stability(Real u, const ModelParams& p) {
  const Real w_a = quasi_potential(Vec2(-1.0, 0.0), p);
  const Real w_u = quasi_potential(Vec2(u, 0.0), p);
  return {std::abs(w_u - w_a), transverse_m2(u, p)};
}

bool on_axis_unstable(const ModelParams& p) {
  p.require_reduced();
  return p.tau > 1.0;
}

namespace {

using Cplx = std::complex<Real>;

// Characteristic function lambda - s*exp(-lambda*tau) + c and its derivative.
struct CharEq {
  Real s, c, tau;
  Cplx f(Cplx z) const { return z - s * std::exp(-z * tau) + c; }
  Cplx df(Cplx z) const { return 1.0 + s * tau * std::exp(-z * tau); }
};

// Damped Newton from z0; returns the root on success.
bool newton(const CharEq& eq, Cplx z0, Cplx& root) {
  Cplx z = z0;
  for (int it = 0; it < 100; ++it) {
    const Cplx fz = eq.f(z);
    if (std::abs(fz) < 1e-12) {
      root = z;
      return true;
    }
    const Cplx dz = fz / eq.df(z);
    Real damp = 1.0;
    Cplx z_next = z - dz;
    for (int k = 0; k < 60 && !(std::abs(eq.f(z_next)) < std::abs(fz)); ++k) {
      damp *= 0.5;
      z_next = z - damp * dz;
    }
    if (!(std::abs(eq.f(z_next)) < std::abs(fz))) return false;
    z = z_next;
  }
  return std::abs(eq.f(z)) < 1e-10;
}

Cplx rightmost_root(const CharEq& eq) {
  // Roots come in conjugate pairs; scanning Im >= 0 suffices.
  std::vector<Cplx> roots;
  for (Real re = -10.0; re <= 2.0 + 1e-12; re += 0.5) {
    for (Real im = 0.0; im <= 20.0 + 1e-12; im += 0.5) {
      Cplx root;
      if (!newton(eq, Cplx(re, im), root)) continue;
      if (std::abs(eq.f(root)) > 1e-10) continue;
      bool known = false;
      for (const Cplx& r : roots)
        if (std::abs(r - root) < 1e-6) known = true;
      if (!known) roots.push_back(root);
    }
  }
  if (roots.empty())
    throw std::runtime_error("rightmost_char_root: root search failed");
  return *std::max_element(roots.begin(), roots.end(),
                           [](const Cplx& a, const Cplx& b) {
                             return a.real() < b.real();
                           });
}

}  // namespace

std::complex<Real> rightmost_char_root(const Vec2& point,
                                       const ModelParams& p) {
  p.validate();
  if (std::abs(std::abs(point[0]) - 1.0) > 1e-12 ||
      std::abs(point[1]) > 1e-12)
    throw std::invalid_argument("point: characteristic roots are defined at A/B");
  // Both A and B linearize to the same pair of decoupled scalar equations.
  const Cplx ru = rightmost_root(CharEq{1.0, 3.0, p.tau});
  const Cplx rv = rightmost_root(CharEq{-1.0, 1.0, p.tau});
  return ru.real() >= rv.real() ? ru : rv;
}

}  // namespace dtp
