#include "dtp/path.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dtp {

Path make_path(Real T, Index n, PathKind kind, Real amplitude, int sign) {
  if (n < 2) throw std::invalid_argument("N: need at least 2 intervals");
  if (!(T > 0)) throw std::invalid_argument("T: must be > 0");
  if (kind == PathKind::straight_plus_bump && !(amplitude > 0))
    throw std::invalid_argument("amplitude: must be > 0");

  Path path;
  path.horizon = T;
  path.dt = T / static_cast<Real>(n);
  path.nodes.resize(n + 1, 2);
  for (Index i = 0; i <= n; ++i) {
    const Real s = static_cast<Real>(i) / static_cast<Real>(n);
    path.nodes(i, 0) = -1.0 + 2.0 * s;
    path.nodes(i, 1) = kind == PathKind::straight_plus_bump
                           ? sign * amplitude * std::sin(M_PI * s)
                           : 0.0;
  }
  path.nodes(0, 0) = -1.0;
  path.nodes(n, 0) = 1.0;
  path.nodes(0, 1) = 0.0;
  path.nodes(n, 1) = 0.0;
  return path;
}

int delay_steps(Real dt, Real tau) {
  if (tau == 0.0) return 0;
  if (!(dt > 0)) throw std::invalid_argument("dt: must be > 0");
  const Real ratio = tau / dt;
  const Real rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio)
    throw std::invalid_argument(
        "dt: mesh incommensurate with tau (dt must equal tau/m)");
  return static_cast<int>(rounded);
}

Mesh default_mesh(Real T, Real tau, Index target_n) {
  if (!(T > 0)) throw std::invalid_argument("T: must be > 0");
  if (!(tau >= 0)) throw std::invalid_argument("tau: must be >= 0");
  if (tau >= T) throw std::invalid_argument("tau: must be < T");
  Mesh mesh;
  if (tau == 0.0) {
    mesh.n = target_n;
    mesh.dt = T / static_cast<Real>(target_n);
    mesh.horizon = T;
    mesh.m = 0;
    return mesh;
  }
  mesh.m = static_cast<int>(std::ceil(static_cast<Real>(target_n) * tau / T - 1e-12));
  mesh.dt = tau / static_cast<Real>(mesh.m);
  mesh.n = static_cast<Index>(std::llround(static_cast<Real>(mesh.m) * T / tau));
  mesh.horizon = mesh.dt * static_cast<Real>(mesh.n);
  return mesh;
}

void write_path_csv(const Path& path, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string());
  out << "t,u,v\n";
  char line[128];
  for (Index i = 0; i < path.nodes.rows(); ++i) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n",
                  path.dt * static_cast<Real>(i), path.nodes(i, 0),
                  path.nodes(i, 1));
    out << line;
  }
}

Path read_path_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,u,v", 0) != 0)
    throw std::runtime_error(file.string() + ": row 1: expected header t,u,v");

  std::vector<Real> ts;
  std::vector<Vec2> states;
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream ss(line);
    Real t, u, v;
    char c1, c2;
    if (!(ss >> t >> c1 >> u >> c2 >> v) || c1 != ',' || c2 != ',')
      throw std::runtime_error(file.string() + ": row " + std::to_string(row) +
                               ": malformed (want t,u,v)");
    ts.push_back(t);
    states.emplace_back(u, v);
  }
  if (states.size() < 3)
    throw std::runtime_error(file.string() + ": need at least 3 nodes");

  Path path;
  const Index n = static_cast<Index>(states.size()) - 1;
  path.nodes.resize(n + 1, 2);
  for (Index i = 0; i <= n; ++i) path.nodes.row(i) = states[i].transpose();
  path.horizon = ts.back();
  path.dt = path.horizon / static_cast<Real>(n);
  // Uniform-mesh check against the recorded times.
  for (Index i = 0; i <= n; ++i)
    if (std::abs(ts[i] - path.dt * static_cast<Real>(i)) >
        1e-6 * std::max<Real>(1.0, path.horizon))
      throw std::runtime_error(file.string() + ": row " + std::to_string(i + 2) +
                               ": non-uniform time column");
  return path;
}

}  // namespace dtp
