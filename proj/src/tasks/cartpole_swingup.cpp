#include "reprogym/tasks/cartpole_swingup.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "reprogym/tasks/cartpole_balance.hpp"

namespace reprogym::tasks {
namespace {

Space swingup_observation_space(const CartPoleSwingUpParams& p) {
  Eigen::VectorXd high(5);
  high << 2.0 * p.x_limit, p.cart_velocity_bound, 1.0, 1.0, p.pole_velocity_bound;
  return Space::box(-high, high);
}

}  // namespace

CartPoleSwingUp::CartPoleSwingUp(TaskOptions options, CartPoleSwingUpParams params)
    : options_(options),
      params_(params),
      action_space_(Space::box(Eigen::VectorXd::Constant(1, -1.0), Eigen::VectorXd::Constant(1, 1.0))),
      observation_space_(swingup_observation_space(params)) {
  if (!(params.force_limit > 0 && params.x_limit > 0 && params.max_steps > 0 &&
        params.init_noise >= 0)) {
    throw ValidationError("cart-pole swing-up limits must be positive");
  }
}

std::vector<JointInit> CartPoleSwingUp::sample_initial_state(Rng& rng) const {
  if (options_.exact_init) return {{kCartJoint, 0.0, 0.0}, {kPoleJoint, std::numbers::pi, 0.0}};
  const double n = params_.init_noise;
  const double x = rng.uniform(-n, n);
  const double x_dot = rng.uniform(-n, n);
  const double theta = std::numbers::pi + rng.uniform(-n, n);
  const double theta_dot = rng.uniform(-n, n);
  return {{kCartJoint, x, x_dot}, {kPoleJoint, theta, theta_dot}};
}

void CartPoleSwingUp::set_action(const Eigen::VectorXd& action) {
  check_action(action);
  force_ = action[0] * params_.force_limit;
  robot().set_joint_force(kCartJoint, force_);
}

Eigen::VectorXd CartPoleSwingUp::observation() const {
  auto& r = robot();
  const double theta = r.joint_position(kPoleJoint);
  Eigen::VectorXd obs(5);
  obs << r.joint_position(kCartJoint), r.joint_velocity(kCartJoint), std::cos(theta),
      std::sin(theta), r.joint_velocity(kPoleJoint);
  return obs;
}

Outcome CartPoleSwingUp::reward_and_done() {
  ++steps_;
  const double theta = wrap_angle(robot().joint_position(kPoleJoint));
  const double theta_dot = robot().joint_velocity(kPoleJoint);
  Outcome out;
  out.reward = -(theta * theta + 0.1 * theta_dot * theta_dot + 0.001 * force_ * force_);
  if (std::abs(robot().joint_position(kCartJoint)) > params_.x_limit) out.reason = "x_limit";
  else if (steps_ >= params_.max_steps) out.reason = "max_steps";
  out.done = !out.reason.empty();
  return out;
}

double CartPoleSwingUp::reward_lower_bound() const noexcept {
  const double pi = std::numbers::pi;
  const double w = params_.pole_velocity_bound;
  const double f = params_.force_limit;
  return -(pi * pi + 0.1 * w * w + 0.001 * f * f);
}

std::string CartPoleSwingUp::describe() const {
  auto& r = robot();
  char buf[160];
  std::snprintf(buf, sizeof buf, "cartpole-swingup step=%lld x=%.4f x_dot=%.4f theta=%.4f theta_dot=%.4f",
                static_cast<long long>(steps_), r.joint_position(kCartJoint),
                r.joint_velocity(kCartJoint), wrap_angle(r.joint_position(kPoleJoint)),
                r.joint_velocity(kPoleJoint));
  return buf;
}

}  // namespace reprogym::tasks
