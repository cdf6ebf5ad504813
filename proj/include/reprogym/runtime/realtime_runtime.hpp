#pragma once

#include <functional>

#include "reprogym/runtime/clock.hpp"
#include "reprogym/runtime/task_runtime.hpp"

namespace reprogym::runtime {

/// Brings the physical system to the requested initial state. Resetting a
/// real robot is application specific, so the runtime only calls this hook.
using ResetCallback = std::function<void(const std::vector<tasks::JointInit>& init)>;

/// Runs the same Task against a robot that evolves in wall-clock time.
///
/// After latching the action the runtime sleeps until the next agent-period
/// boundary, then syncs the robot. When the step logic overruns the boundary
/// the missed boundaries are counted (StepInfo::overruns) and the schedule
/// realigns to the next one.
class RealTimeRuntime final : public TaskRuntime {
 public:
  RealTimeRuntime(std::string id, std::unique_ptr<tasks::Task> task, robot::RealTimeRobot& robot,
                  ClockSource& clock, RuntimeConfig config, ResetCallback on_reset);

  Duration time() const override { return boundary_ - episode_start_; }

  std::uint64_t total_overruns() const noexcept { return total_overruns_; }

 protected:
  void install_initial_state(const std::vector<tasks::JointInit>& init) override;
  StepInfo advance_world() override;

 private:
  /// now() with the monotonicity contract enforced.
  Duration checked_now();

  robot::RealTimeRobot* robot_;
  ClockSource* clock_;
  ResetCallback on_reset_;
  Duration last_now_{Duration::min()};
  Duration episode_start_{0};
  Duration boundary_{0};
  std::uint64_t total_overruns_ = 0;
};

}  // namespace reprogym::runtime
