#pragma once

#include <Eigen/Core>

#include "reprogym/core/time.hpp"

namespace reprogym::physics {

/// Generalized coordinates of one engine instance plus its simulated time.
struct PhysicsState {
  Eigen::VectorXd q;
  Eigen::VectorXd qd;
  Duration sim_time{0};

  bool all_finite() const noexcept { return q.allFinite() && qd.allFinite(); }
};

/// Bitwise equality of q, qd and sim_time.
bool identical(const PhysicsState& a, const PhysicsState& b) noexcept;

}  // namespace reprogym::physics
