#include "dtp/relax.hpp"

#include <cmath>
#include <stdexcept>

#include "dtp/parallel.hpp"

namespace dtp {

void RelaxConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("max_iters: must be >= 1");
  if (!(grad_tol > 0)) throw std::invalid_argument("grad_tol: must be > 0");
  if (!(step_init > 0)) throw std::invalid_argument("step_init: must be > 0");
  if (!(backtrack_factor > 0 && backtrack_factor < 1))
    throw std::invalid_argument("backtrack_factor: must be in (0,1)");
  if (!(armijo_c > 0 && armijo_c < 1))
    throw std::invalid_argument("armijo_c: must be in (0,1)");
  if (!(bump_amplitude > 0))
    throw std::invalid_argument("bump_amplitude: must be > 0");
}

namespace {

Branch classify_branch(const Path& path, Real L) {
  if (L < 1e-3) return Branch::on_axis;
  Index at = 0;
  path.nodes.col(1).abs().maxCoeff(&at);
  return path.nodes(at, 1) > 0 ? Branch::upper : Branch::lower;
}

// Max over nodes of the Euclidean node distance.
Real path_distance(const Path& a, const Path& b) {
  return (a.nodes - b.nodes).square().rowwise().sum().sqrt().maxCoeff();
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::on_axis: return "on_axis";
    case Branch::upper: return "upper";
    case Branch::lower: return "lower";
  }
  return "?";
}

DtpResult relax(Path path, const ModelParams& p, const RelaxConfig& cfg) {
  cfg.validate();
  ActionEval eval = make_action_eval(path, p);

  ArrayX2 nodes = path.nodes;
  ArrayX2 grad, trial(nodes.rows(), 2);
  Real s = eval.gradient(nodes, grad);
  Real ginf = grad.abs().maxCoeff();
  Real step = cfg.step_init;
  long iters = 0;
  bool finite = std::isfinite(s) && std::isfinite(ginf);

  while (finite && iters < cfg.max_iters && ginf >= cfg.grad_tol) {
    const Real g2 = grad.square().sum();
    Real eta = step;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      trial = nodes - eta * grad;
      const Real s_try = eval.value(trial);
      if (std::isfinite(s_try) && s_try <= s - cfg.armijo_c * eta * g2) {
        accepted = true;
        break;
      }
      eta *= cfg.backtrack_factor;
    }
    if (!accepted) break;  // step floor reached; decide by the gradient norm

    nodes.swap(trial);
    ++iters;
    s = eval.gradient(nodes, grad);
    ginf = grad.abs().maxCoeff();
    finite = std::isfinite(s) && std::isfinite(ginf);
    step = std::min(eta * cfg.step_growth, cfg.step_max);
  }

  DtpResult result;
  path.nodes.swap(nodes);
  result.path = std::move(path);
  result.action = s;
  result.iterations = iters;
  result.grad_inf_norm = ginf;
  result.converged = finite && ginf < cfg.grad_tol;
  result.L = max_transverse_distance(result.path);
  result.branch = classify_branch(result.path, result.L);
  return result;
}

std::vector<DtpResult> solve_branches(const ModelParams& p, Real T, Index n,
                                      const RelaxConfig& cfg, int jobs,
                                      std::vector<DtpResult>* failures) {
  p.validate();
  cfg.validate();

  std::vector<Path> starts;
  starts.push_back(make_path(T, n, PathKind::straight));
  starts.push_back(make_path(T, n, PathKind::straight_plus_bump,
                             cfg.bump_amplitude, +1));
  starts.push_back(make_path(T, n, PathKind::straight_plus_bump,
                             cfg.bump_amplitude, -1));

  std::vector<DtpResult> runs(starts.size());
  parallel_for(static_cast<long>(starts.size()), jobs, [&](long i) {
    runs[i] = relax(std::move(starts[i]), p, cfg);
  });

  std::vector<DtpResult> converged;
  for (auto& r : runs) {
    if (r.converged)
      converged.push_back(std::move(r));
    else if (failures)
      failures->push_back(std::move(r));
  }
  if (converged.empty())
    throw std::runtime_error(
        "solve_branches: no initialization converged (diverged or hit "
        "max_iters)");

  // Deduplicate coincident paths, keeping the lower action.
  std::vector<DtpResult> distinct;
  for (auto& r : converged) {
    bool merged = false;
    for (auto& d : distinct) {
      if (path_distance(r.path, d.path) < 1e-3) {
        if (r.action < d.action) d = std::move(r);
        merged = true;
        break;
      }
    }
    if (!merged) distinct.push_back(std::move(r));
  }

  Real s_min = distinct.front().action;
  for (const auto& d : distinct) s_min = std::min(s_min, d.action);
  std::vector<DtpResult> minimizers;
  for (auto& d : distinct)
    if (d.action <= s_min + 1e-6) minimizers.push_back(std::move(d));
  return minimizers;
}

std::optional<Real> find_tau_c(ModelParams params, Real tau_lo, Real tau_hi,
                               Real coarse_step, Real T, const RelaxConfig& cfg,
                               Index target_n, int jobs) {
  if (!(tau_lo > 0 && tau_hi > tau_lo && tau_hi < T))
    throw std::invalid_argument("tau range: need 0 < lo < hi < T");
  if (!(coarse_step > 0)) throw std::invalid_argument("coarse_step: must be > 0");

  auto bifurcated = [&](Real tau) {
    params.tau = tau;
    const Mesh mesh = default_mesh(T, tau, target_n);
    const auto results = solve_branches(params, mesh.horizon, mesh.n, cfg, jobs);
    Real l_max = 0;
    for (const auto& r : results) l_max = std::max(l_max, r.L);
    return l_max > kBifurcationL;
  };

  // Coarse scan until the classification flips.
  Real lo = tau_lo;
  if (bifurcated(lo)) return std::nullopt;  // no false->true change in range
  Real hi = lo;
  bool found = false;
  for (Real tau = tau_lo + coarse_step; tau <= tau_hi + 1e-12;
       tau += coarse_step) {
    hi = std::min(tau, tau_hi);
    if (bifurcated(hi)) {
      found = true;
      break;
    }
    lo = hi;
  }
  if (!found) return std::nullopt;

  while (hi - lo > coarse_step / 8.0) {
    const Real mid = 0.5 * (lo + hi);
    (bifurcated(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace dtp
