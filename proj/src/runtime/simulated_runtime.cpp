#include "reprogym/runtime/simulated_runtime.hpp"

#include <algorithm>
#include <thread>

namespace reprogym::runtime {

physics::PhysicsState initial_physics_state(const std::vector<std::string>& joints,
                                            const std::vector<tasks::JointInit>& init) {
  physics::PhysicsState state;
  state.q = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(joints.size()));
  state.qd = state.q;
  for (const auto& j : init) {
    const auto it = std::find(joints.begin(), joints.end(), j.joint);
    if (it == joints.end()) throw LookupError("initial state names unknown joint '" + j.joint + "'");
    const auto i = static_cast<Eigen::Index>(it - joints.begin());
    state.q[i] = j.position;
    state.qd[i] = j.velocity;
  }
  return state;
}

SimulatedRuntime::SimulatedRuntime(std::string id, std::shared_ptr<const physics::DynamicsModel> dyn,
                                   std::unique_ptr<tasks::Task> task, RuntimeConfig config)
    : TaskRuntime(std::move(id), std::move(task), config),
      robot_(std::move(dyn), config.engine, config.physics_dt),
      pending_engine_(config.engine) {
  attach(robot_);
}

Duration SimulatedRuntime::time() const { return robot_.state().sim_time; }

void SimulatedRuntime::install_initial_state(const std::vector<tasks::JointInit>& init) {
  robot_.set_engine(pending_engine_);
  robot_.reset_state(initial_physics_state(robot_.joint_names(), init));
}

StepInfo SimulatedRuntime::advance_world() {
  robot_.clear_flags();
  const auto ticks = config().ticks_per_step();
  robot_.advance(ticks);
  total_ticks_ += static_cast<std::uint64_t>(ticks);
  StepInfo info;
  info.effort_clamped = robot_.effort_clamped();
  info.velocity_clamped = robot_.velocity_clamped();
  return info;
}

void SimulatedRuntime::on_step_begin() {
  if (config().rtf > 0.0) step_start_ = std::chrono::steady_clock::now();
}

void SimulatedRuntime::on_step_end() {
  if (config().rtf <= 0.0) return;
  const auto wall = std::chrono::duration<double, std::nano>(
      static_cast<double>(config().agent_period.count()) / config().rtf);
  std::this_thread::sleep_until(step_start_ +
                                std::chrono::duration_cast<std::chrono::steady_clock::duration>(wall));
}

}  // namespace reprogym::runtime
