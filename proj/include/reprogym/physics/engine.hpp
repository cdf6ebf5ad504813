#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "reprogym/core/error.hpp"
#include "reprogym/core/time.hpp"
#include "reprogym/physics/dynamics.hpp"
#include "reprogym/physics/state.hpp"

namespace reprogym::physics {

enum class EngineId { EulerSemiImplicit, RungeKutta4 };

/// "euler-si" / "rk4".
std::string_view to_string(EngineId id) noexcept;
std::optional<EngineId> engine_from_string(std::string_view name) noexcept;

/// Integration produced a non-finite state. Carries that state.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, PhysicsState state)
      : Error(what), state_(std::move(state)) {}

  const PhysicsState& state() const noexcept { return state_; }

 private:
  PhysicsState state_;
};

/// A physics backend. Implementations are stateless: the result depends only
/// on the arguments.
class PhysicsEngine {
 public:
  virtual ~PhysicsEngine() = default;

  virtual EngineId id() const noexcept = 0;

  /// Advances `state` by dt under a constant generalized force. Throws
  /// ValidationError for dt <= 0, a wrong-sized force or a non-finite input,
  /// DivergenceError when the result is not finite.
  virtual PhysicsState step(const DynamicsModel& dyn, const PhysicsState& state,
                            const Eigen::VectorXd& force, Duration dt) const = 0;
};

/// The built-in backend for `id`.
const PhysicsEngine& engine(EngineId id) noexcept;

inline PhysicsState engine_step(EngineId id, const DynamicsModel& dyn, const PhysicsState& state,
                                const Eigen::VectorXd& force, Duration dt) {
  return engine(id).step(dyn, state, force, dt);
}

/// One engine instance: a backend, a shared immutable model and the current
/// state. Single-owner.
class World {
 public:
  World(EngineId engine, std::shared_ptr<const DynamicsModel> dyn);

  const DynamicsModel& dynamics() const noexcept { return *dyn_; }
  EngineId engine_id() const noexcept { return engine_->id(); }
  void set_engine(EngineId id) noexcept { engine_ = &engine(id); }

  const PhysicsState& state() const noexcept { return state_; }

  /// Throws ValidationError on dimension mismatch or non-finite values;
  /// the stored state is unchanged in that case.
  void set_state(const PhysicsState& state);

  void step(const Eigen::VectorXd& force, Duration dt);

 private:
  std::shared_ptr<const DynamicsModel> dyn_;
  const PhysicsEngine* engine_;
  PhysicsState state_;
};

}  // namespace reprogym::physics
