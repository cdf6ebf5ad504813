#include "reprogym/runtime/task_runtime.hpp"

#include <cstdio>
#include <fstream>

#include "reprogym/core/seed.hpp"
#include "reprogym/physics/engine.hpp"

namespace reprogym::runtime {
namespace {

std::unique_ptr<tasks::Task> checked(std::unique_ptr<tasks::Task> task) {
  if (!task) throw ValidationError("runtime needs a task");
  return task;
}

}  // namespace

TaskRuntime::TaskRuntime(std::string id, std::unique_ptr<tasks::Task> task, RuntimeConfig config)
    : task_(checked(std::move(task))),
      config_(config),
      metadata_{std::move(id), task_->observation_space(), task_->action_space(),
                config.agent_period} {
  config_.validate();
  seed(config_.seed);
}

void TaskRuntime::attach(robot::RobotInterface& robot) { task_->attach(robot); }

void TaskRuntime::require_open() const {
  if (closed_) throw StateError("environment '" + metadata_.id + "' is closed");
}

std::vector<std::uint64_t> TaskRuntime::seed(std::uint64_t master) {
  require_open();
  const SeedTree tree(master);
  const std::vector<std::uint64_t> children = {
      tree.child(seed_labels::kInit), tree.child(seed_labels::kTask),
      tree.child(seed_labels::kActionSpace), tree.child(seed_labels::kObservationSpace)};
  init_rng_ = Rng(children[0]);
  task_->reseed(children[1]);
  action_rng_ = Rng(children[2]);
  observation_rng_ = Rng(children[3]);
  config_.seed = master;
  return children;
}

Eigen::VectorXd TaskRuntime::sample_action() {
  require_open();
  return metadata_.action_space.sample(action_rng_);
}

Eigen::VectorXd TaskRuntime::reset() {
  require_open();
  install_initial_state(task_->sample_initial_state(init_rng_));
  task_->on_reset();
  has_reset_ = true;
  done_ = false;
  last_.reset();
  return task_->observation();
}

StepResult TaskRuntime::step(const Eigen::VectorXd& action) {
  require_open();
  if (!has_reset_) throw StateError("step() before reset() on '" + metadata_.id + "'");
  if (done_) throw StateError("episode of '" + metadata_.id + "' is done; call reset()");
  if (!metadata_.action_space.contains(action)) {
    throw ValidationError("action is outside the action space of '" + metadata_.id + "'");
  }
  on_step_begin();
  task_->set_action(action);
  StepInfo info;
  try {
    info = advance_world();
  } catch (const physics::DivergenceError&) {
    done_ = true;
    throw;
  } catch (const StepError&) {
    done_ = true;
    throw;
  }
  StepResult result;
  result.observation = task_->observation();
  auto outcome = task_->reward_and_done();
  result.reward = outcome.reward;
  result.done = outcome.done;
  info.termination = std::move(outcome.reason);
  result.info = std::move(info);
  done_ = result.done;
  last_ = StepRecord{to_seconds(time()), result.observation, action, result.reward, result.done};
  on_step_end();
  return result;
}

std::optional<std::string> TaskRuntime::render(const RenderMode& mode) {
  require_open();
  switch (mode.kind) {
    case RenderMode::Kind::None:
      return std::nullopt;
    case RenderMode::Kind::Text: {
      char t[48];
      std::snprintf(t, sizeof t, "t=%.4f ", to_seconds(time()));
      return t + task_->describe();
    }
    case RenderMode::Kind::File: {
      std::ofstream out(mode.path, std::ios::app);
      if (!out) throw IoError("cannot open render file '" + mode.path.string() + "'");
      const StepRecord snapshot =
          last_ ? *last_
                : StepRecord{to_seconds(time()), task_->observation(), Eigen::VectorXd(), 0.0, done_};
      out << to_json_line(snapshot) << '\n';
      if (!out) throw IoError("cannot write render file '" + mode.path.string() + "'");
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace reprogym::runtime
