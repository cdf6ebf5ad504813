#pragma once

#include "reprogym/tasks/task.hpp"

namespace reprogym::tasks {

struct CartPoleSwingUpParams {
  double force_limit = 25.0;  // N
  double x_limit = 2.4;       // m
  std::int64_t max_steps = 500;
  double init_noise = 0.05;
  double cart_velocity_bound = 20.0;  // m/s
  double pole_velocity_bound = 30.0;  // rad/s
};

/// Swing the pole up from hanging and hold it. Observation
/// [x, x_dot, cos(theta), sin(theta), theta_dot] with theta = 0 upright;
/// reward -(wrap(theta)^2 + 0.1 theta_dot^2 + 0.001 F^2).
class CartPoleSwingUp final : public Task {
 public:
  explicit CartPoleSwingUp(TaskOptions options = {}, CartPoleSwingUpParams params = {});

  std::string_view id() const noexcept override { return "cartpole-swingup"; }
  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }

  std::vector<JointInit> sample_initial_state(Rng& rng) const override;
  void set_action(const Eigen::VectorXd& action) override;
  Eigen::VectorXd observation() const override;
  Outcome reward_and_done() override;
  std::string describe() const override;

  const CartPoleSwingUpParams& params() const noexcept { return params_; }
  /// Most negative reachable reward (exclusive).
  double reward_lower_bound() const noexcept;

 private:
  TaskOptions options_;
  CartPoleSwingUpParams params_;
  Space action_space_;
  Space observation_space_;
  double force_ = 0.0;
};

}  // namespace reprogym::tasks
