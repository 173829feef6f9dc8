#pragma once

#include <vector>

#include "dtp/types.hpp"

namespace dtp {

/// Ring of m+1 states covering one delay window [t - tau, t] on a uniform
/// grid of spacing dt = tau/m. Together with the newest state this is the
/// full information a delayed system needs to evolve; snapshots of it make
/// delayed trajectories restartable.
class HistoryBuffer {
 public:
  HistoryBuffer() = default;
  HistoryBuffer(int m, Real dt)
      : ring_(static_cast<size_t>(m) + 1, Vec2::Zero()), m_(m), dt_(dt) {}

  static HistoryBuffer constant(int m, Real dt, const Vec2& x) {
    HistoryBuffer h(m, dt);
    for (auto& s : h.ring_) s = x;
    return h;
  }

  int delay_m() const { return m_; }
  Real dt() const { return dt_; }
  Real tau() const { return dt_ * m_; }

  const Vec2& newest() const { return ring_[head_]; }
  const Vec2& oldest() const { return back(m_); }

  /// State k grid steps back in time, k in [0, m].
  const Vec2& back(int k) const {
    const int size = m_ + 1;
    return ring_[static_cast<size_t>((head_ + size - k) % size)];
  }

  void push(const Vec2& x) {
    head_ = (head_ + 1) % (m_ + 1);
    ring_[static_cast<size_t>(head_)] = x;
  }

  bool operator==(const HistoryBuffer& other) const {
    if (m_ != other.m_ || dt_ != other.dt_) return false;
    for (int k = 0; k <= m_; ++k)
      if (back(k) != other.back(k)) return false;
    return true;
  }

 private:
  std::vector<Vec2> ring_;
  int m_ = 0;
  int head_ = 0;
  Real dt_ = 0;
};

}  // namespace dtp
