#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reprogym/physics/dynamics.hpp"
#include "reprogym/runtime/config.hpp"
#include "reprogym/runtime/simulated_runtime.hpp"
#include "reprogym/tasks/task.hpp"

namespace reprogym::runtime {

/// Registered environment: a task paired with its robot model and default
/// timing.
struct EnvSpec {
  std::string id;
  std::string_view model_sdf;
  Duration physics_dt;
  Duration agent_period;
};

std::vector<std::string> env_ids();

/// Throws LookupError listing the registered ids.
const EnvSpec& env_spec(std::string_view id);

RuntimeConfig default_config(std::string_view id);

/// Parses and compiles the env's shipped robot model.
std::shared_ptr<const physics::DynamicsModel> load_dynamics(std::string_view id);

std::unique_ptr<SimulatedRuntime> make_env(std::string_view id, const RuntimeConfig& config,
                                           const tasks::TaskOptions& options = {});
std::unique_ptr<SimulatedRuntime> make_env(std::string_view id);

}  // namespace reprogym::runtime
