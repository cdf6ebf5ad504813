#include "reprogym/tasks/cartpole_balance.hpp"

#include <cmath>
#include <cstdio>

namespace reprogym::tasks {

CartPoleBalance::CartPoleBalance(TaskOptions options, CartPoleBalanceParams params)
    : options_(options),
      params_(params),
      action_space_(Space::box(Eigen::VectorXd::Constant(1, -1.0), Eigen::VectorXd::Constant(1, 1.0))),
      observation_space_(Space::box(
          Eigen::Vector4d(-2.0 * params.x_limit, -params.cart_velocity_bound, -std::numbers::pi / 2,
                          -params.pole_velocity_bound),
          Eigen::Vector4d(2.0 * params.x_limit, params.cart_velocity_bound, std::numbers::pi / 2,
                          params.pole_velocity_bound))) {
  if (!(params.force_limit > 0 && params.theta_limit > 0 && params.x_limit > 0 &&
        params.max_steps > 0 && params.init_noise >= 0)) {
    throw ValidationError("cart-pole balance limits must be positive");
  }
}

std::vector<JointInit> CartPoleBalance::sample_initial_state(Rng& rng) const {
  if (options_.exact_init) return {{kCartJoint, 0.0, 0.0}, {kPoleJoint, 0.0, 0.0}};
  const double n = params_.init_noise;
  // Draw order is part of the reproducibility contract: x, x_dot, theta, theta_dot.
  const double x = rng.uniform(-n, n);
  const double x_dot = rng.uniform(-n, n);
  const double theta = rng.uniform(-n, n);
  const double theta_dot = rng.uniform(-n, n);
  return {{kCartJoint, x, x_dot}, {kPoleJoint, theta, theta_dot}};
}

void CartPoleBalance::set_action(const Eigen::VectorXd& action) {
  check_action(action);
  force_ = action[0] * params_.force_limit;
  robot().set_joint_force(kCartJoint, force_);
}

Eigen::VectorXd CartPoleBalance::observation() const {
  auto& r = robot();
  return Eigen::Vector4d(r.joint_position(kCartJoint), r.joint_velocity(kCartJoint),
                         r.joint_position(kPoleJoint), r.joint_velocity(kPoleJoint));
}

Outcome CartPoleBalance::reward_and_done() {
  ++steps_;
  const double x = robot().joint_position(kCartJoint);
  const double theta = robot().joint_position(kPoleJoint);
  Outcome out{1.0, false, {}};
  if (std::abs(theta) > params_.theta_limit) out.reason = "theta_limit";
  else if (std::abs(x) > params_.x_limit) out.reason = "x_limit";
  else if (steps_ >= params_.max_steps) out.reason = "max_steps";
  out.done = !out.reason.empty();
  return out;
}

std::string CartPoleBalance::describe() const {
  const auto o = observation();
  char buf[160];
  std::snprintf(buf, sizeof buf, "cartpole-balance step=%lld x=%.4f x_dot=%.4f theta=%.4f theta_dot=%.4f",
                static_cast<long long>(steps_), o[0], o[1], o[2], o[3]);
  return buf;
}

}  // namespace reprogym::tasks
