#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "reprogym/core/space.hpp"
#include "reprogym/core/time.hpp"

namespace reprogym {

struct EnvMetadata {
  std::string id;
  Space observation_space;
  Space action_space;
  Duration agent_period{0};
};

/// Side information of one step. Never affects the trajectory.
struct StepInfo {
  bool effort_clamped = false;
  bool velocity_clamped = false;
  /// Missed agent-period boundaries (real-time runtime only).
  std::uint64_t overruns = 0;
  /// Empty unless done; names the predicate that ended the episode.
  std::string termination;
};

struct StepResult {
  Eigen::VectorXd observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

struct RenderMode {
  enum class Kind { None, Text, File };

  Kind kind = Kind::None;
  std::filesystem::path path;

  static RenderMode none() { return {}; }
  static RenderMode text() { return {Kind::Text, {}}; }
  static RenderMode file(std::filesystem::path p) { return {Kind::File, std::move(p)}; }
};

/// Agent-facing, Gym-style environment.
///
/// Instances are single-owner: calls on one instance must be externally
/// serialized, but an instance may be moved to another thread.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvMetadata& metadata() const = 0;

  /// Starts a new episode. Without an intervening seed() the initial state
  /// is the next draw of the existing stream.
  virtual Eigen::VectorXd reset() = 0;

  /// Advances by exactly one agent period. Throws ValidationError for an
  /// action outside the action space (nothing is applied) and StateError
  /// when called before reset() or after the episode ended.
  virtual StepResult step(const Eigen::VectorXd& action) = 0;

  /// Re-keys every stochastic component from SeedTree(master) and returns
  /// the installed child seeds.
  virtual std::vector<std::uint64_t> seed(std::uint64_t master) = 0;

  /// NONE: no-op. TEXT: one-line state summary. FILE: appends a JSON line
  /// snapshot to the path. Never changes the simulation.
  virtual std::optional<std::string> render(const RenderMode& mode) = 0;

  /// After close every other call throws StateError.
  virtual void close() = 0;

  /// Simulated time elapsed in the current episode.
  virtual Duration time() const = 0;
};

}  // namespace reprogym
