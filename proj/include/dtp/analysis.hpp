#pragma once

#include <vector>

#include "dtp/path.hpp"
#include "dtp/relax.hpp"
#include "dtp/types.hpp"

namespace dtp {

/// Initial history handed to the deterministic integration that starts at a
/// path node: the path segment that led there (padded with A before t=0), or
/// the node value held constant (sensitivity check).
enum class HistorySeed { path_segment, constant };

struct LifetimeRecord {
  std::vector<Real> per_node;  // signed: negative relaxes to A, positive to B
  Index transition_index = -1; // first node on the B side, -1 if no switch
  Vec2 transition_state = Vec2::Zero();
  std::vector<Index> outliers; // nodes misclassified w.r.t. the single switch
};

/// Signed deterministic relaxation time from every node to the
/// kappa-neighborhood of A (negative) or B (positive), integrating the
/// delayed system with RK4 at the path mesh step. Nodes that exhaust t_max
/// record +-t_max with the sign of u. The transition state is the midpoint
/// of the last A-side and first B-side node.
LifetimeRecord lifetime(const Path& path, const ModelParams& p,
                        Real kappa = 1e-5, Real t_max = 500.0,
                        HistorySeed seed = HistorySeed::path_segment);

/// Amplitude of the optimal fluctuation force per interval:
/// b_i = |r_i| = |(x_{i+1}-x_i)/dt - F(x_i, x_{i-m})|.
ArrayX optimal_force(const Path& path, const ModelParams& p);

struct ScanRow {
  Real tau = 0;
  Real beta = 0;
  Real action = 0;
  Real L = 0;
  int branches = 0;
  bool bifurcated = false;
  bool converged = false;
};

/// solve_branches per grid value; failed rows carry converged = false.
std::vector<ScanRow> scan_tau(const std::vector<Real>& tau_grid,
                              ModelParams params, Real T,
                              const RelaxConfig& cfg, Index target_n = 5000,
                              int jobs = 1);

struct SlopeRow {
  Real tau = 0;
  Real dS_dtau = 0;
  Real d2S_dtau2 = 0;
};

/// Central finite differences of action over tau (one-sided at the ends).
/// Converged rows only; requires >= 3 of them on a uniform grid.
std::vector<SlopeRow> slope_analysis(const std::vector<ScanRow>& rows);

struct DiagramCell {
  Real tau = 0;
  Real beta = 0;
  bool bifurcated = false;
  Real L = 0;
  Real action = 0;
  int branches = 0;
  bool converged = false;
};

std::vector<DiagramCell> scan_2d(const std::vector<Real>& tau_grid,
                                 const std::vector<Real>& beta_grid, Real T,
                                 const RelaxConfig& cfg, Index target_n = 5000,
                                 int jobs = 1);

}  // namespace dtp
