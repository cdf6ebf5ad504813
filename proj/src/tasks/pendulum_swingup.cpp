#include "reprogym/tasks/pendulum_swingup.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace reprogym::tasks {

PendulumSwingUp::PendulumSwingUp(TaskOptions options, PendulumSwingUpParams params)
    : options_(options),
      params_(params),
      action_space_(Space::box(Eigen::VectorXd::Constant(1, -1.0), Eigen::VectorXd::Constant(1, 1.0))),
      observation_space_(Space::box(Eigen::Vector3d(-1.0, -1.0, -params.velocity_bound),
                                    Eigen::Vector3d(1.0, 1.0, params.velocity_bound))) {
  if (!(params.torque_limit > 0 && params.max_steps > 0 && params.init_noise >= 0)) {
    throw ValidationError("pendulum swing-up limits must be positive");
  }
}

std::vector<JointInit> PendulumSwingUp::sample_initial_state(Rng& rng) const {
  // Hinge position 0 is hanging, i.e. task angle pi.
  if (options_.exact_init) return {{kHingeJoint, 0.0, 0.0}};
  const double n = params_.init_noise;
  const double q = rng.uniform(-n, n);
  const double qd = rng.uniform(-n, n);
  return {{kHingeJoint, q, qd}};
}

void PendulumSwingUp::set_action(const Eigen::VectorXd& action) {
  check_action(action);
  torque_ = action[0] * params_.torque_limit;
  robot().set_joint_force(kHingeJoint, torque_);
}

Eigen::VectorXd PendulumSwingUp::observation() const {
  // cos(q - pi) = -cos(q), sin(q - pi) = -sin(q); exact at q = 0.
  const double q = robot().joint_position(kHingeJoint);
  return Eigen::Vector3d(-std::cos(q), -std::sin(q), robot().joint_velocity(kHingeJoint));
}

Outcome PendulumSwingUp::reward_and_done() {
  ++steps_;
  const double theta = wrap_angle(robot().joint_position(kHingeJoint) - std::numbers::pi);
  const double theta_dot = robot().joint_velocity(kHingeJoint);
  Outcome out;
  out.reward = -(theta * theta + 0.1 * theta_dot * theta_dot + 0.001 * torque_ * torque_);
  if (steps_ >= params_.max_steps) {
    out.done = true;
    out.reason = "max_steps";
  }
  return out;
}

double PendulumSwingUp::reward_lower_bound() const noexcept {
  const double pi = std::numbers::pi;
  const double w = params_.velocity_bound;
  const double t = params_.torque_limit;
  return -(pi * pi + 0.1 * w * w + 0.001 * t * t);
}

std::string PendulumSwingUp::describe() const {
  const double q = robot().joint_position(kHingeJoint);
  char buf[128];
  std::snprintf(buf, sizeof buf, "pendulum-swingup step=%lld theta=%.4f theta_dot=%.4f",
                static_cast<long long>(steps_), wrap_angle(q - std::numbers::pi),
                robot().joint_velocity(kHingeJoint));
  return buf;
}

}  // namespace reprogym::tasks
