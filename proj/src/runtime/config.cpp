#include "reprogym/runtime/config.hpp"

#include <cmath>
#include <string>

#include "reprogym/core/error.hpp"

namespace reprogym::runtime {

void RuntimeConfig::validate() const {
  if (physics_dt <= Duration::zero()) throw ValidationError("physics_dt must be > 0");
  if (agent_period <= Duration::zero()) throw ValidationError("agent_period must be > 0");
  if (agent_period % physics_dt != Duration::zero()) {
    throw ValidationError("agent_period (" + std::to_string(to_seconds(agent_period)) +
                          " s) is not a whole multiple of physics_dt (" +
                          std::to_string(to_seconds(physics_dt)) + " s)");
  }
  if (!std::isfinite(rtf) || rtf < 0.0) throw ValidationError("rtf must be finite and >= 0");
}

}  // namespace reprogym::runtime
