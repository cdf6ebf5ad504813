#pragma once

#include <chrono>
#include <memory>

#include "reprogym/robot/simulated_robot.hpp"
#include "reprogym/runtime/task_runtime.hpp"

namespace reprogym::runtime {

/// Physics state for a task's initial joint values; unnamed joints start at
/// rest at zero. Throws LookupError for an unknown joint.
physics::PhysicsState initial_physics_state(const std::vector<std::string>& joints,
                                            const std::vector<tasks::JointInit>& init);

/// Runs the task against an in-process physics engine.
///
/// Each step advances exactly agent_period / physics_dt ticks. With rtf > 0
/// the call also blocks until agent_period / rtf of wall time has passed
/// since it started; pacing never changes the computed results.
class SimulatedRuntime final : public TaskRuntime {
 public:
  SimulatedRuntime(std::string id, std::shared_ptr<const physics::DynamicsModel> dyn,
                   std::unique_ptr<tasks::Task> task, RuntimeConfig config);

  Duration time() const override;

  /// Engine used from the next reset on.
  void set_engine(physics::EngineId id) noexcept { pending_engine_ = id; }
  physics::EngineId engine() const noexcept { return robot_.engine_id(); }

  const physics::PhysicsState& physics_state() const noexcept { return robot_.state(); }
  const robot::SimulatedRobot& robot() const noexcept { return robot_; }
  std::uint64_t total_ticks() const noexcept { return total_ticks_; }

 protected:
  void install_initial_state(const std::vector<tasks::JointInit>& init) override;
  StepInfo advance_world() override;
  void on_step_begin() override;
  void on_step_end() override;

 private:
  robot::SimulatedRobot robot_;
  physics::EngineId pending_engine_;
  std::chrono::steady_clock::time_point step_start_;
  std::uint64_t total_ticks_ = 0;
};

}  // namespace reprogym::runtime
