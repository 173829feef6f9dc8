#pragma once

#include <filesystem>

#include "dtp/types.hpp"

namespace dtp {

/// Uniformly discretized trajectory in (u,v) over [0, horizon] with N
/// intervals; row i of nodes holds (u_i, v_i) at time i*dt.
struct Path {
  ArrayX2 nodes;     // (N+1) x 2
  Real horizon = 0;  // total time T = dt * N
  Real dt = 0;

  Index n_intervals() const { return nodes.rows() - 1; }
};

enum class PathKind { straight, straight_plus_bump };

/// Linear interpolation from A=(-1,0) to B=(1,0); the bump kind adds
/// v_i = sign * amplitude * sin(pi*i/N) on top.
Path make_path(Real T, Index n, PathKind kind, Real amplitude = 0.1,
               int sign = +1);

/// Number of mesh steps per delay window: m = tau/dt, which must be a
/// nonnegative integer for the delayed residual to stay on the mesh.
/// Returns 0 for tau = 0. Throws on incommensurate meshes.
int delay_steps(Real dt, Real tau);

struct Mesh {
  Index n;       // interval count
  Real dt;       // = tau/m exactly when tau > 0
  Real horizon;  // realized T = n*dt (may differ from the request in the
                 // last digits when T/tau is not exactly representable)
  int m;         // delay steps, 0 for tau = 0
};

/// Smallest commensurate mesh with at least target_n intervals:
/// m = ceil(target_n * tau / T), dt = tau/m, n = round(m*T/tau).
Mesh default_mesh(Real T, Real tau, Index target_n = 5000);

/// CSV interchange format: header "t,u,v", one row per node, 17 significant
/// digits.
void write_path_csv(const Path& path, const std::filesystem::path& file);
Path read_path_csv(const std::filesystem::path& file);

}  // namespace dtp
