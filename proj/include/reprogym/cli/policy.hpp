#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "reprogym/core/rng.hpp"
#include "reprogym/core/space.hpp"

namespace reprogym::cli {

/// Parsed form of `--policy {zero,random,script:PATH}`.
struct PolicySpec {
  enum class Kind { Zero, Random, Script };

  Kind kind = Kind::Zero;
  std::filesystem::path script;

  /// Throws ValidationError for anything else.
  static PolicySpec parse(const std::string& text);
};

/// Produces one action per agent step.
class Policy {
 public:
  virtual ~Policy() = default;
  /// nullopt when the policy has no more actions (scripts only).
  virtual std::optional<Eigen::VectorXd> act(const Eigen::VectorXd& observation) = 0;
};

/// RANDOM draws from the "policy" child of the env seed; SCRIPT reads a
/// JSON-Lines file whose lines are arrays of numbers or objects with an
/// "act" array. Script actions must match the action space dimension.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec, const Space& action_space,
                                    std::uint64_t env_seed);

/// Script actions as loaded from disk. Throws IoError, ParseError(line) or
/// ValidationError on dimension mismatch.
std::vector<Eigen::VectorXd> load_action_script(const std::filesystem::path& path,
                                                Eigen::Index action_dim);

/// Replays a fixed list of actions.
class ScriptPolicy final : public Policy {
 public:
  explicit ScriptPolicy(std::vector<Eigen::VectorXd> actions) : actions_(std::move(actions)) {}
  std::optional<Eigen::VectorXd> act(const Eigen::VectorXd&) override;

 private:
  std::vector<Eigen::VectorXd> actions_;
  std::size_t next_ = 0;
};

}  // namespace reprogym::cli
