#include "dtp/sdde.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dtp {

Vec2 em_step(const HistoryBuffer& h, const ModelParams& p, Real dt,
             const Vec2& noise) {
  if (std::abs(dt - h.dt()) > 1e-12 * std::max<Real>(dt, h.dt()))
    throw std::invalid_argument("dt: must equal the history buffer spacing");
  return em_step_with(
      h, [&p](const Vec2& x, const Vec2& xd) { return drift(x, xd, p); },
      p.epsilon, dt, noise);
}

StochasticMesh stochastic_mesh(Real tau) {
  if (!(tau >= 0)) throw std::invalid_argument("tau: must be >= 0");
  if (tau == 0.0) return {0, 1e-3};
  const int m = static_cast<int>(std::ceil(1000.0 * tau - 1e-9));
  return {m, tau / static_cast<Real>(m)};
}

void write_snapshot_csv(const HistoryBuffer& h,
                        const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string());
  out << "offset,u,v\n";
  char line[128];
  for (int k = h.delay_m(); k >= 0; --k) {
    const Vec2& x = h.back(k);
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", -h.dt() * k, x[0],
                  x[1]);
    out << line;
  }
}

HistoryBuffer read_snapshot_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("offset,u,v", 0) != 0)
    throw std::runtime_error(file.string() + ": expected header offset,u,v");
  std::vector<Real> offsets;
  std::vector<Vec2> states;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Real off, u, v;
    char c1, c2;
    if (!(ss >> off >> c1 >> u >> c2 >> v) || c1 != ',' || c2 != ',')
      throw std::runtime_error(file.string() + ": malformed snapshot row");
    offsets.push_back(off);
    states.emplace_back(u, v);
  }
  if (states.empty()) throw std::runtime_error(file.string() + ": empty snapshot");
  const int m = static_cast<int>(states.size()) - 1;
  const Real dt = m > 0 ? -offsets.front() / static_cast<Real>(m) : 0.0;
  HistoryBuffer h(m, dt);
  for (const Vec2& x : states) h.push(x);
  return h;
}

}  // namespace dtp
