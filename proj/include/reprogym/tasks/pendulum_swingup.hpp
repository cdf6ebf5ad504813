#pragma once

#include "reprogym/tasks/task.hpp"

namespace reprogym::tasks {

struct PendulumSwingUpParams {
  double torque_limit = 2.0;  // N m
  std::int64_t max_steps = 200;
  double init_noise = 0.05;
  double velocity_bound = 8.0;  // rad/s
};

inline constexpr const char* kHingeJoint = "hinge";

/// Swing a torque-limited pendulum to upright. The task angle is
/// theta = q - pi (0 upright, pi hanging) where q is the hinge position.
/// Observation [cos(theta), sin(theta), theta_dot]; reward
/// -(wrap(theta)^2 + 0.1 theta_dot^2 + 0.001 tau^2); fixed horizon.
class PendulumSwingUp final : public Task {
 public:
  explicit PendulumSwingUp(TaskOptions options = {}, PendulumSwingUpParams params = {});

  std::string_view id() const noexcept override { return "pendulum-swingup"; }
  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }

  std::vector<JointInit> sample_initial_state(Rng& rng) const override;
  void set_action(const Eigen::VectorXd& action) override;
  Eigen::VectorXd observation() const override;
  Outcome reward_and_done() override;
  std::string describe() const override;

  const PendulumSwingUpParams& params() const noexcept { return params_; }
  double reward_lower_bound() const noexcept;

 private:
  TaskOptions options_;
  PendulumSwingUpParams params_;
  Space action_space_;
  Space observation_space_;
  double torque_ = 0.0;
};

}  // namespace reprogym::tasks
