#pragma once

#include <optional>
#include <vector>

#include "dtp/action.hpp"
#include "dtp/path.hpp"

namespace dtp {

/// Step-size policy for the pseudo-time relaxation of the action.
struct RelaxConfig {
  long max_iters = 500000;
  Real grad_tol = 1e-6;        // stop when grad_inf_norm < grad_tol
  Real step_init = 1e-2;
  Real backtrack_factor = 0.5;
  Real armijo_c = 1e-4;
  Real step_growth = 2.0;      // accepted step is regrown up to step_max
  Real step_max = 1.0;
  Real bump_amplitude = 0.1;   // symmetry-breaking start for solve_branches

  void validate() const;
};

enum class Branch { on_axis, upper, lower };
const char* branch_name(Branch b);

struct DtpResult {
  Path path;
  Real action = 0;
  Branch branch = Branch::on_axis;
  bool converged = false;
  long iterations = 0;
  Real L = 0;
  Real grad_inf_norm = 0;
};

/// Paths with L above this are classified as bifurcated (an order of
/// magnitude above the converged on-axis noise floor, below observed
/// off-axis amplitudes).
inline constexpr Real kBifurcationL = 0.05;

/// Gradient descent on the discretized action with Armijo backtracking.
/// Endpoints never move. A non-finite action or gradient ends the run with
/// converged = false rather than throwing.
DtpResult relax(Path path, const ModelParams& p, const RelaxConfig& cfg);

/// Relaxes from three starts (straight, +bump, -bump), deduplicates paths
/// that coincide within node-wise distance 1e-3, and returns the distinct
/// minimizers within action tolerance 1e-6 of the lowest. Throws
/// std::runtime_error if no start converges; other failed runs are appended
/// to *failures when given.
std::vector<DtpResult> solve_branches(const ModelParams& p, Real T, Index n,
                                      const RelaxConfig& cfg, int jobs = 1,
                                      std::vector<DtpResult>* failures = nullptr);

/// Scans tau over [tau_lo, tau_hi] in coarse_step increments until the first
/// bifurcated point (L > kBifurcationL), then bisects the bracketing interval
/// to width <= coarse_step/8. Returns the midpoint of the final bracket, or
/// nullopt when the classification never changes in the range.
std::optional<Real> find_tau_c(ModelParams params, Real tau_lo, Real tau_hi,
                               Real coarse_step, Real T, const RelaxConfig& cfg,
                               Index target_n = 5000, int jobs = 1);

}  // namespace dtp
