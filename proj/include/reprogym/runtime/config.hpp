#pragma once

#include <cstdint>

#include "reprogym/core/time.hpp"
#include "reprogym/physics/engine.hpp"

namespace reprogym::runtime {

struct RuntimeConfig {
  Duration physics_dt = std::chrono::milliseconds(1);
  Duration agent_period = std::chrono::milliseconds(20);
  /// Real-Time Factor: simulated seconds per wall second. 0 = unbounded.
  double rtf = 0.0;
  physics::EngineId engine = physics::EngineId::EulerSemiImplicit;
  std::uint64_t seed = 0;

  /// Throws ValidationError unless physics_dt > 0, agent_period is a
  /// positive whole multiple of physics_dt and rtf is finite and >= 0.
  void validate() const;

  std::int64_t ticks_per_step() const noexcept { return agent_period / physics_dt; }
};

}  // namespace reprogym::runtime
