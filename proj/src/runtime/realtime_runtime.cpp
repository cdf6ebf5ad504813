#include "reprogym/runtime/realtime_runtime.hpp"

namespace reprogym::runtime {

RealTimeRuntime::RealTimeRuntime(std::string id, std::unique_ptr<tasks::Task> task,
                                 robot::RealTimeRobot& robot, ClockSource& clock,
                                 RuntimeConfig config, ResetCallback on_reset)
    : TaskRuntime(std::move(id), std::move(task), config),
      robot_(&robot),
      clock_(&clock),
      on_reset_(std::move(on_reset)) {
  if (!on_reset_) throw ValidationError("real-time runtime needs a reset callback");
  attach(robot);
}

Duration RealTimeRuntime::checked_now() {
  const Duration now = clock_->now();
  if (now < last_now_) {
    throw ContractViolation("clock went backwards: " + std::to_string(to_seconds(now)) + " s after " +
                            std::to_string(to_seconds(last_now_)) + " s");
  }
  last_now_ = now;
  return now;
}

void RealTimeRuntime::install_initial_state(const std::vector<tasks::JointInit>& init) {
  on_reset_(init);
  episode_start_ = checked_now();
  boundary_ = episode_start_;
  try {
    robot_->sync(episode_start_);
  } catch (const robot::CommunicationError& e) {
    throw StepError(std::string("robot communication failed during reset: ") + e.what());
  }
}

StepInfo RealTimeRuntime::advance_world() {
  const Duration period = config().agent_period;
  Duration deadline = boundary_ + period;
  const Duration now = checked_now();
  StepInfo info;
  if (now > deadline) {
    // ceil((now - deadline) / period) boundaries were missed.
    const auto missed = (now - deadline + period - Duration(1)) / period;
    deadline += missed * period;
    info.overruns = static_cast<std::uint64_t>(missed);
    total_overruns_ += info.overruns;
  }
  clock_->sleep_until(deadline);
  const Duration woke = checked_now();
  try {
    robot_->sync(woke);
  } catch (const robot::CommunicationError& e) {
    throw StepError(std::string("robot communication failed: ") + e.what());
  }
  boundary_ = deadline;
  return info;
}

}  // namespace reprogym::runtime
