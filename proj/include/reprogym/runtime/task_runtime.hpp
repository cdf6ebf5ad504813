#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "reprogym/core/environment.hpp"
#include "reprogym/core/rng.hpp"
#include "reprogym/core/step_record.hpp"
#include "reprogym/robot/robot.hpp"
#include "reprogym/runtime/config.hpp"
#include "reprogym/tasks/task.hpp"

namespace reprogym::runtime {

/// The step was aborted because the backend failed. Carries the cause in
/// its message; the episode must be reset.
class StepError : public Error {
 public:
  using Error::Error;
};

/// Environment logic shared by every runtime: seeding, action validation,
/// episode bookkeeping and rendering. Subclasses decide how the world moves.
class TaskRuntime : public Environment {
 public:
  const EnvMetadata& metadata() const override { return metadata_; }
  Eigen::VectorXd reset() override;
  StepResult step(const Eigen::VectorXd& action) override;
  std::vector<std::uint64_t> seed(std::uint64_t master) override;
  std::optional<std::string> render(const RenderMode& mode) override;
  void close() override { closed_ = true; }

  const RuntimeConfig& config() const noexcept { return config_; }
  const tasks::Task& task() const noexcept { return *task_; }
  std::int64_t episode_steps() const noexcept { return task_->steps(); }
  bool episode_done() const noexcept { return done_; }

  /// Draw from the action space with the env's "action-space" stream.
  Eigen::VectorXd sample_action();

  /// The StepRecord of the most recent step, if any in this episode.
  const std::optional<StepRecord>& last_record() const noexcept { return last_; }

 protected:
  TaskRuntime(std::string id, std::unique_ptr<tasks::Task> task, RuntimeConfig config);

  /// Must be called once by the subclass constructor once its robot exists.
  void attach(robot::RobotInterface& robot);

  virtual void install_initial_state(const std::vector<tasks::JointInit>& init) = 0;
  /// Moves the world by one agent period after the action was latched.
  virtual StepInfo advance_world() = 0;
  virtual void on_step_begin() {}
  virtual void on_step_end() {}

  tasks::Task& mutable_task() noexcept { return *task_; }

 private:
  void require_open() const;

  std::unique_ptr<tasks::Task> task_;
  RuntimeConfig config_;
  EnvMetadata metadata_;
  Rng init_rng_{0};
  Rng action_rng_{0};
  Rng observation_rng_{0};
  std::optional<StepRecord> last_;
  bool has_reset_ = false;
  bool done_ = false;
  bool closed_ = false;
};

}  // namespace reprogym::runtime
