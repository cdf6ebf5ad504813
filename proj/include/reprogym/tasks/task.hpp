#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "reprogym/core/rng.hpp"
#include "reprogym/core/space.hpp"
#include "reprogym/robot/robot.hpp"

namespace reprogym::tasks {

struct TaskOptions {
  /// Start every episode from the nominal state with no noise.
  bool exact_init = false;
};

struct JointInit {
  std::string joint;
  double position = 0.0;
  double velocity = 0.0;
};

struct Outcome {
  double reward = 0.0;
  bool done = false;
  /// Which predicate ended the episode; empty while running.
  std::string reason;
};

/// Robot-agnostic decision logic: how actions become actuation references
/// and how robot state becomes observation, reward and termination.
///
/// A task only ever talks to the RobotInterface it is attached to.
class Task {
 public:
  virtual ~Task() = default;

  virtual std::string_view id() const noexcept = 0;
  virtual const Space& action_space() const noexcept = 0;
  virtual const Space& observation_space() const noexcept = 0;

  void attach(robot::RobotInterface& robot) noexcept { robot_ = &robot; }
  bool attached() const noexcept { return robot_ != nullptr; }

  /// Initial joint state for a new episode, drawn from `rng`.
  virtual std::vector<JointInit> sample_initial_state(Rng& rng) const = 0;

  /// Re-keys task-internal noise. The shipped tasks are noise-free.
  virtual void reseed(std::uint64_t /*seed*/) {}

  /// Called after the runtime installed the initial state.
  virtual void on_reset() { steps_ = 0; }

  /// Throws ValidationError when `action` is outside the action space.
  virtual void set_action(const Eigen::VectorXd& action) = 0;

  virtual Eigen::VectorXd observation() const = 0;

  /// Scores the transition that just happened; counts one step.
  virtual Outcome reward_and_done() = 0;

  /// One-line human-readable state.
  virtual std::string describe() const = 0;

  std::int64_t steps() const noexcept { return steps_; }

 protected:
  robot::RobotInterface& robot() const;
  void check_action(const Eigen::VectorXd& action) const;

  std::int64_t steps_ = 0;

 private:
  robot::RobotInterface* robot_ = nullptr;
};

/// Maps an angle to (-pi, pi].
double wrap_angle(double angle) noexcept;

}  // namespace reprogym::tasks
