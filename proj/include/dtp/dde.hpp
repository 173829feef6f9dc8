#pragma once

#include <utility>

#include "dtp/history.hpp"
#include "dtp/types.hpp"

namespace dtp {

/// Fixed-step fourth-order Runge-Kutta for delayed systems. The delayed
/// argument at half steps is interpolated linearly between stored history
/// grid points; with a mesh commensurate to tau (dt = tau/m) all full-step
/// delayed arguments land on the grid exactly. m = 0 degenerates to the
/// classic ODE scheme with the delayed argument equal to the current state.
///
/// Drift: Vec2 f(const Vec2& x, const Vec2& x_delayed).
template <class Drift>
class DelayedRk4 {
 public:
  DelayedRk4(HistoryBuffer history, Drift f)
      : h_(std::move(history)), f_(std::move(f)) {}

  const Vec2& state() const { return h_.newest(); }
  const HistoryBuffer& history() const { return h_; }

  void step() {
    const Real dt = h_.dt();
    const Vec2 x = h_.newest();
    const int m = h_.delay_m();
    Vec2 d0, dmid, d1;
    if (m == 0) {
      // No delay: the delayed argument tracks the stage value.
      const Vec2 k1 = f_(x, x);
      const Vec2 x2 = x + 0.5 * dt * k1;
      const Vec2 k2 = f_(x2, x2);
      const Vec2 x3 = x + 0.5 * dt * k2;
      const Vec2 k3 = f_(x3, x3);
      const Vec2 x4 = x + dt * k3;
      const Vec2 k4 = f_(x4, x4);
      h_.push(x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
      return;
    }
    d0 = h_.back(m);
    d1 = h_.back(m - 1);
    dmid = 0.5 * (d0 + d1);
    const Vec2 k1 = f_(x, d0);
    const Vec2 k2 = f_(x + 0.5 * dt * k1, dmid);
    const Vec2 k3 = f_(x + 0.5 * dt * k2, dmid);
    const Vec2 k4 = f_(x + dt * k3, d1);
    h_.push(x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }

 private:
  HistoryBuffer h_;
  Drift f_;
};

}  // namespace dtp
