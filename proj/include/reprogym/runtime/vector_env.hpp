#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reprogym/runtime/simulated_runtime.hpp"
#include "reprogym/tasks/task.hpp"

namespace reprogym::runtime {

class WorkerPool;

struct VectorStepResult {
  Eigen::VectorXd observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
  /// True when this entry is the reset that follows a finished episode.
  bool reset = false;
  /// Set when the instance failed (e.g. diverged); other instances are
  /// unaffected and this one is reset on the next step.
  std::optional<std::string> error;
};

/// n independent simulated instances stepped together.
///
/// Instance i is seeded with SeedTree(master).child("env-i") and behaves
/// exactly like a standalone env with that seed fed the same actions,
/// whatever the worker count. Auto-reset: a done instance returns its
/// terminal observation; on the next step it is reset instead of stepped
/// and that entry carries the reset observation (reward 0, done false).
class VectorEnv {
 public:
  /// workers == 0 picks std::thread::hardware_concurrency(); 1 runs inline.
  VectorEnv(const std::string& env_id, std::size_t n, std::uint64_t master_seed,
            RuntimeConfig base = {}, std::size_t workers = 0, tasks::TaskOptions options = {});
  ~VectorEnv();

  VectorEnv(const VectorEnv&) = delete;
  VectorEnv& operator=(const VectorEnv&) = delete;

  std::size_t size() const noexcept { return envs_.size(); }
  std::size_t workers() const noexcept;
  SimulatedRuntime& instance(std::size_t i) { return *envs_.at(i); }

  static std::uint64_t instance_seed(std::uint64_t master, std::size_t index);

  std::vector<Eigen::VectorXd> reset();

  /// Throws ValidationError when actions.size() != size().
  std::vector<VectorStepResult> step(const std::vector<Eigen::VectorXd>& actions);

 private:
  std::vector<std::unique_ptr<SimulatedRuntime>> envs_;
  std::vector<char> needs_reset_;
  std::unique_ptr<WorkerPool> pool_;
};

}  // namespace reprogym::runtime
