#pragma once

#include <cstdint>
#include <memory>

#include "reprogym/physics/engine.hpp"
#include "reprogym/robot/robot.hpp"

namespace reprogym::robot {

/// Robot backed by an in-process physics engine.
///
/// Every advance holds the latched references for all requested ticks,
/// clamps the generalized force to the joint effort limits before each
/// integration and the velocities to the joint velocity limits after it.
class SimulatedRobot final : public RealTimeRobot {
 public:
  SimulatedRobot(std::shared_ptr<const physics::DynamicsModel> dyn, physics::EngineId engine,
                 Duration physics_dt);

  const std::vector<std::string>& joint_names() const override { return names_; }
  ControlMode control_mode(const std::string& joint) const override;
  void set_control_mode(const std::string& joint, ControlMode mode) override;
  double joint_position(const std::string& joint) const override;
  double joint_velocity(const std::string& joint) const override;
  void set_joint_force(const std::string& joint, double value) override;
  void set_joint_position_target(const std::string& joint, double target,
                                 const PDGains& gains) override;
  BaseState base_state() const override { return BaseState::identity(); }

  /// Advances to `now` measured from the clock origin set by reset_state.
  void sync(Duration now) override;

  /// Installs `state`, clears all references (FORCE mode, zero force) and the
  /// clamp flags, and sets the clock origin used by sync().
  void reset_state(const physics::PhysicsState& state, Duration clock_origin = Duration::zero());

  void advance(std::int64_t ticks);

  const physics::PhysicsState& state() const noexcept { return world_.state(); }
  physics::EngineId engine_id() const noexcept { return world_.engine_id(); }
  void set_engine(physics::EngineId id) noexcept { world_.set_engine(id); }
  Duration physics_dt() const noexcept { return dt_; }
  const physics::DynamicsModel& dynamics() const noexcept { return world_.dynamics(); }

  /// Generalized force used in the most recent tick, after clamping.
  const Eigen::VectorXd& applied_force() const noexcept { return applied_; }

  bool effort_clamped() const noexcept { return effort_clamped_; }
  bool velocity_clamped() const noexcept { return velocity_clamped_; }
  void clear_flags() noexcept { effort_clamped_ = velocity_clamped_ = false; }

 private:
  struct Reference {
    ControlMode mode = ControlMode::Force;
    double force = 0.0;
    double target = 0.0;
    PDGains gains;
  };

  Eigen::Index index_of(const std::string& joint) const;
  void require_actuated(Eigen::Index i) const;

  physics::World world_;
  Duration dt_;
  std::vector<std::string> names_;
  std::vector<Reference> refs_;
  Eigen::VectorXd applied_;
  Eigen::VectorXd force_;
  Duration origin_{0};
  std::int64_t ticks_ = 0;
  bool effort_clamped_ = false;
  bool velocity_clamped_ = false;
};

}  // namespace reprogym::robot
