#pragma once

#include <numbers>

#include "reprogym/tasks/task.hpp"

namespace reprogym::tasks {

/// Classic cart-pole benchmark constants. These are conventional choices,
/// not derived from any model.
struct CartPoleBalanceParams {
  double force_limit = 25.0;                // N, force at |action| = 1
  double theta_limit = 12.0 * std::numbers::pi / 180.0;  // rad
  double x_limit = 2.4;                     // m
  std::int64_t max_steps = 500;
  double init_noise = 0.05;                 // uniform half-width, every state component
  // Observation bounds; match the velocity limits of the shipped model.
  double cart_velocity_bound = 20.0;        // m/s
  double pole_velocity_bound = 30.0;        // rad/s
};

inline constexpr const char* kCartJoint = "cart_joint";
inline constexpr const char* kPoleJoint = "pole_joint";

/// Keep the pole upright. Observation [x, x_dot, theta, theta_dot], reward 1
/// per step, done when |theta| > theta_limit, |x| > x_limit or after
/// max_steps.
class CartPoleBalance final : public Task {
 public:
  explicit CartPoleBalance(TaskOptions options = {}, CartPoleBalanceParams params = {});

  std::string_view id() const noexcept override { return "cartpole-balance"; }
  const Space& action_space() const noexcept override { return action_space_; }
  const Space& observation_space() const noexcept override { return observation_space_; }

  std::vector<JointInit> sample_initial_state(Rng& rng) const override;
  void set_action(const Eigen::VectorXd& action) override;
  Eigen::VectorXd observation() const override;
  Outcome reward_and_done() override;
  std::string describe() const override;

  const CartPoleBalanceParams& params() const noexcept { return params_; }
  double commanded_force() const noexcept { return force_; }

 private:
  TaskOptions options_;
  CartPoleBalanceParams params_;
  Space action_space_;
  Space observation_space_;
  double force_ = 0.0;
};

}  // namespace reprogym::tasks
