#pragma once

#include <cmath>
#include <filesystem>

#include "dtp/history.hpp"
#include "dtp/model.hpp"
#include "dtp/types.hpp"

namespace dtp {

/// Euler-Maruyama step for an arbitrary delayed drift:
///   x_new = x + dt*f(x, x_delayed) + sqrt(epsilon*dt)*noise.
/// The caller pushes x_new into the buffer.
template <class Drift>
Vec2 em_step_with(const HistoryBuffer& h, Drift&& f, Real epsilon, Real dt,
                  const Vec2& noise) {
  const Vec2& x = h.newest();
  const Vec2& x_del = h.back(h.delay_m());
  return x + dt * f(x, x_del) + std::sqrt(epsilon * dt) * noise;
}

/// Euler-Maruyama step of the delayed Maier-Stein dynamics.
Vec2 em_step(const HistoryBuffer& h, const ModelParams& p, Real dt,
             const Vec2& noise);

/// Stochastic integration mesh: dt = tau/m with m = ceil(1000*tau) so that
/// dt <= 1e-3 (relaxation time scale is O(1)); dt = 1e-3 when tau = 0.
struct StochasticMesh {
  int m;
  Real dt;
};
StochasticMesh stochastic_mesh(Real tau);

/// Snapshot interchange (debugging/restart): CSV of the history window with
/// header "offset,u,v", offset in [-tau, 0].
void write_snapshot_csv(const HistoryBuffer& h,
                        const std::filesystem::path& file);
HistoryBuffer read_snapshot_csv(const std::filesystem::path& file);

}  // namespace dtp
