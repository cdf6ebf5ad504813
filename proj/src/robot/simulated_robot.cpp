#include "reprogym/robot/simulated_robot.hpp"

#include <algorithm>
#include <cmath>

namespace reprogym::robot {

SimulatedRobot::SimulatedRobot(std::shared_ptr<const physics::DynamicsModel> dyn,
                               physics::EngineId engine, Duration physics_dt)
    : world_(engine, std::move(dyn)), dt_(physics_dt) {
  if (dt_ <= Duration::zero()) throw ValidationError("physics_dt must be > 0");
  for (const auto& j : world_.dynamics().joints()) names_.push_back(j.name);
  refs_.resize(names_.size());
  applied_ = Eigen::VectorXd::Zero(world_.dynamics().dof());
  force_ = applied_;
}

Eigen::Index SimulatedRobot::index_of(const std::string& joint) const {
  const auto it = std::find(names_.begin(), names_.end(), joint);
  if (it == names_.end()) throw LookupError("unknown joint '" + joint + "'");
  return static_cast<Eigen::Index>(it - names_.begin());
}

void SimulatedRobot::require_actuated(Eigen::Index i) const {
  if (!world_.dynamics().joints()[static_cast<std::size_t>(i)].actuated) {
    throw ControlModeError("joint '" + names_[static_cast<std::size_t>(i)] + "' is passive");
  }
}

ControlMode SimulatedRobot::control_mode(const std::string& joint) const {
  return refs_[static_cast<std::size_t>(index_of(joint))].mode;
}

void SimulatedRobot::set_control_mode(const std::string& joint, ControlMode mode) {
  const auto i = index_of(joint);
  require_actuated(i);
  refs_[static_cast<std::size_t>(i)] = Reference{mode, 0.0, world_.state().q[i], {}};
}

double SimulatedRobot::joint_position(const std::string& joint) const {
  return world_.state().q[index_of(joint)];
}

double SimulatedRobot::joint_velocity(const std::string& joint) const {
  return world_.state().qd[index_of(joint)];
}

void SimulatedRobot::set_joint_force(const std::string& joint, double value) {
  const auto i = index_of(joint);
  require_actuated(i);
  auto& ref = refs_[static_cast<std::size_t>(i)];
  if (ref.mode != ControlMode::Force) {
    throw ControlModeError("joint '" + joint + "' is not in FORCE mode");
  }
  if (!std::isfinite(value)) throw ValidationError("joint force must be finite");
  ref.force = value;
}

void SimulatedRobot::set_joint_position_target(const std::string& joint, double target,
                                               const PDGains& gains) {
  const auto i = index_of(joint);
  require_actuated(i);
  auto& ref = refs_[static_cast<std::size_t>(i)];
  if (ref.mode != ControlMode::PositionPD) {
    throw ControlModeError("joint '" + joint + "' is not in POSITION_PD mode");
  }
  if (!std::isfinite(target)) throw ValidationError("position target must be finite");
  check_gains(gains);
  ref.target = target;
  ref.gains = gains;
}

void SimulatedRobot::reset_state(const physics::PhysicsState& state, Duration clock_origin) {
  world_.set_state(state);
  for (auto& r : refs_) r = Reference{};
  applied_.setZero();
  origin_ = clock_origin;
  ticks_ = 0;
  clear_flags();
}

void SimulatedRobot::advance(std::int64_t ticks) {
  const auto& joints = world_.dynamics().joints();
  for (std::int64_t t = 0; t < ticks; ++t) {
    const auto& s = world_.state();
    for (std::size_t i = 0; i < refs_.size(); ++i) {
      const auto& ref = refs_[i];
      const auto k = static_cast<Eigen::Index>(i);
      double f = ref.mode == ControlMode::Force
                     ? ref.force
                     : ref.gains.kp * (ref.target - s.q[k]) - ref.gains.kd * s.qd[k];
      const double limit = joints[i].effort_limit;
      if (f > limit || f < -limit) {
        f = std::clamp(f, -limit, limit);
        effort_clamped_ = true;
      }
      force_[k] = f;
    }
    world_.step(force_, dt_);
    applied_ = force_;

    const auto& next = world_.state();
    bool over = false;
    for (std::size_t i = 0; i < joints.size(); ++i) {
      const double v = next.qd[static_cast<Eigen::Index>(i)];
      over |= v > joints[i].velocity_limit || v < -joints[i].velocity_limit;
    }
    if (over) {
      physics::PhysicsState clamped = next;
      for (std::size_t i = 0; i < joints.size(); ++i) {
        const double limit = joints[i].velocity_limit;
        auto& v = clamped.qd[static_cast<Eigen::Index>(i)];
        v = std::clamp(v, -limit, limit);
      }
      world_.set_state(clamped);
      velocity_clamped_ = true;
    }
    ++ticks_;
  }
}

void SimulatedRobot::sync(Duration now) {
  const Duration elapsed = now - origin_;
  if (elapsed < Duration::zero()) throw ContractViolation("sync time precedes the clock origin");
  const std::int64_t target = elapsed / dt_;
  if (target > ticks_) advance(target - ticks_);
}

}  // namespace reprogym::robot
