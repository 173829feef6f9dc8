#include "dtp/action.hpp"

#include <stdexcept>

namespace dtp {

ActionEval::ActionEval(Index n, Real dt, int m, Real beta)
    : n_(n), dt_(dt), m_(m), beta_(beta) {
  if (n < 2) throw std::invalid_argument("N: need at least 2 intervals");
  if (m < 0 || m >= n) throw std::invalid_argument("m: delay steps out of range");
  u_del_.resize(n);
  v_del_.resize(n);
  r_.resize(n, 2);
}

void ActionEval::delayed_args(const ArrayX2& nodes) {
  const Index n = n_;
  const int m = m_;
  u_del_.head(m).setConstant(-1.0);  // clamped pre-history at A
  v_del_.head(m).setZero();
  u_del_.tail(n - m) = nodes.col(0).head(n - m);
  v_del_.tail(n - m) = nodes.col(1).head(n - m);
}

Real ActionEval::value_residuals(const ArrayX2& nodes) {
  const Index n = n_;
  delayed_args(nodes);
  auto u = nodes.col(0).head(n);
  auto v = nodes.col(1).head(n);
  r_.col(0) = (nodes.col(0).tail(n) - u) / dt_ -
              (u_del_ - u.cube() - beta_ * u * v.square());
  r_.col(1) = (nodes.col(1).tail(n) - v) / dt_ - (-v_del_ - u.square() * v);

  long double s = 0.0L;
  const Real* ru = r_.col(0).data();
  const Real* rv = r_.col(1).data();
  for (Index i = 0; i < n; ++i) s += ru[i] * ru[i] + rv[i] * rv[i];
  return static_cast<Real>(0.5L * dt_ * s);
}

Real ActionEval::value(const ArrayX2& nodes) { return value_residuals(nodes); }

Real ActionEval::gradient(const ArrayX2& nodes, ArrayX2& grad) {
  const Index n = n_;
  const int m = m_;
  const Real s = value_residuals(nodes);

  grad.resize(n + 1, 2);
  auto u = nodes.col(0).segment(1, n - 1);
  auto v = nodes.col(1).segment(1, n - 1);
  auto ru = r_.col(0);
  auto rv = r_.col(1);

  // Interior rows j = 1..N-1: r_{j-1} - r_j - dt * J1(j)^T r_j, with the
  // delayed coupling -dt * J2^T r_{j+m} added where j+m <= N-1.
  grad.col(0).segment(1, n - 1) =
      ru.head(n - 1) - ru.tail(n - 1) -
      dt_ * ((-3.0 * u.square() - beta_ * v.square()) * ru.tail(n - 1) +
             (-2.0 * u * v) * rv.tail(n - 1));
  grad.col(1).segment(1, n - 1) =
      rv.head(n - 1) - rv.tail(n - 1) -
      dt_ * ((-2.0 * beta_ * u * v) * ru.tail(n - 1) +
             (-u.square()) * rv.tail(n - 1));

  const Index k = n - 1 - m;  // interior rows coupled to a later residual
  if (k > 0) {
    grad.col(0).segment(1, k) -= dt_ * ru.segment(1 + m, k);
    grad.col(1).segment(1, k) += dt_ * rv.segment(1 + m, k);
  }

  grad.row(0).setZero();
  grad.row(n).setZero();
  return s;
}

ActionEval make_action_eval(const Path& path, const ModelParams& p) {
  p.validate();
  if (p.tau >= path.horizon)
    throw std::invalid_argument("tau: must be < T for a transition path");
  const int m = delay_steps(path.dt, p.tau);
  return ActionEval(path.n_intervals(), path.dt, m, p.beta);
}

ActionReport action(const Path& path, const ModelParams& p) {
  ActionEval eval = make_action_eval(path, p);
  ArrayX2 grad;
  ActionReport report;
  report.action = eval.gradient(path.nodes, grad);
  report.residuals = eval.residuals();
  report.grad_inf_norm = grad.abs().maxCoeff();
  report.iterations = 0;
  return report;
}

ArrayX2 action_gradient(const Path& path, const ModelParams& p) {
  ActionEval eval = make_action_eval(path, p);
  ArrayX2 grad;
  eval.gradient(path.nodes, grad);
  return grad;
}

Real max_transverse_distance(const Path& path) {
  return path.nodes.col(1).abs().maxCoeff();
}

}  // namespace dtp
