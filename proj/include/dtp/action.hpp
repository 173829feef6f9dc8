#pragma once

#include "dtp/path.hpp"
#include "dtp/types.hpp"

namespace dtp {

struct ActionReport {
  Real action = 0;
  ArrayX2 residuals;  // N x 2, row i = r_i
  Real grad_inf_norm = 0;
  long iterations = 0;  // 0 for a pure evaluation
};

/// Discretized Freidlin-Wentzell action with the full delayed drift,
///   S_T = (dt/2) * sum_i |r_i|^2,
///   r_i = (x_{i+1} - x_i)/dt - F(x_i, x_{i-m}),   m = tau/dt,
/// with the pre-history clamped to A (x_j = A for j < 0). Left-endpoint
/// quadrature keeps the delayed index on the mesh exactly.
ActionReport action(const Path& path, const ModelParams& p);

/// Exact gradient of the discretized action with respect to each node
/// (discretize-then-differentiate); rows 0 and N are zero (pinned endpoints).
ArrayX2 action_gradient(const Path& path, const ModelParams& p);

/// Order parameter L = max_i |v_i|.
Real max_transverse_distance(const Path& path);

/// Reusable evaluation workspace for a fixed mesh; avoids per-call
/// allocation in the relaxation loop.
class ActionEval {
 public:
  ActionEval(Index n, Real dt, int m, Real beta);

  /// S only.
  Real value(const ArrayX2& nodes);
  /// S; residuals left in residuals().
  Real value_residuals(const ArrayX2& nodes);
  /// S; fills grad ((N+1) x 2, zero first/last rows) and residuals().
  Real gradient(const ArrayX2& nodes, ArrayX2& grad);

  const ArrayX2& residuals() const { return r_; }
  int delay_m() const { return m_; }

 private:
  void delayed_args(const ArrayX2& nodes);

  Index n_;
  Real dt_;
  int m_;
  Real beta_;
  ArrayX u_del_, v_del_;
  ArrayX2 r_;
};

/// Validates mesh commensurability and tau < T; returns the workspace.
ActionEval make_action_eval(const Path& path, const ModelParams& p);

}  // namespace dtp
