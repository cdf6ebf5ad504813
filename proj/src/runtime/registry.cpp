#include "reprogym/runtime/registry.hpp"

#include "reprogym/embedded_models.hpp"
#include "reprogym/model/sdf.hpp"
#include "reprogym/tasks/registry.hpp"

namespace reprogym::runtime {
namespace {

using std::chrono::milliseconds;

const std::vector<EnvSpec>& specs() {
  static const std::vector<EnvSpec> kSpecs = {
      {"cartpole-balance", embedded::kCartPoleSdf, milliseconds(1), milliseconds(20)},
      {"cartpole-swingup", embedded::kCartPoleSdf, milliseconds(1), milliseconds(20)},
      {"pendulum-swingup", embedded::kPendulumSdf, milliseconds(1), milliseconds(50)},
  };
  return kSpecs;
}

}  // namespace

std::vector<std::string> env_ids() {
  std::vector<std::string> ids;
  for (const auto& s : specs()) ids.push_back(s.id);
  return ids;
}

const EnvSpec& env_spec(std::string_view id) {
  for (const auto& s : specs()) {
    if (s.id == id) return s;
  }
  std::string known;
  for (const auto& s : specs()) known += (known.empty() ? "" : ", ") + s.id;
  throw LookupError("unknown environment '" + std::string(id) + "'; registered: " + known);
}

RuntimeConfig default_config(std::string_view id) {
  const auto& spec = env_spec(id);
  RuntimeConfig cfg;
  cfg.physics_dt = spec.physics_dt;
  cfg.agent_period = spec.agent_period;
  return cfg;
}

std::shared_ptr<const physics::DynamicsModel> load_dynamics(std::string_view id) {
  const auto& spec = env_spec(id);
  auto parsed = model::parse_sdf(spec.model_sdf);
  if (!parsed.ok()) {
    std::string why = parsed.diagnostics.empty() ? "unknown error" : parsed.diagnostics.front().message;
    throw Error("shipped model for '" + spec.id + "' failed to load: " + why);
  }
  return std::make_shared<const physics::DynamicsModel>(physics::compile_model(*parsed.model));
}

std::unique_ptr<SimulatedRuntime> make_env(std::string_view id, const RuntimeConfig& config,
                                           const tasks::TaskOptions& options) {
  const auto& spec = env_spec(id);
  return std::make_unique<SimulatedRuntime>(spec.id, load_dynamics(id),
                                            tasks::make_task(id, options), config);
}

std::unique_ptr<SimulatedRuntime> make_env(std::string_view id) {
  return make_env(id, default_config(id));
}

}  // namespace reprogym::runtime
