#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "reprogym/core/error.hpp"
#include "reprogym/core/time.hpp"

namespace reprogym::robot {

enum class ControlMode { Force, PositionPD };

/// The call does not match the joint's control mode, or the joint cannot be
/// actuated.
class ControlModeError : public Error {
 public:
  using Error::Error;
};

/// Talking to the robot failed (real-time backends).
class CommunicationError : public Error {
 public:
  using Error::Error;
};

struct PDGains {
  double kp = 0.0;  // N/rad or N/m
  double kd = 0.0;  // N s/rad or N s/m
};

/// Throws ValidationError unless kp >= 0 and kd >= 0 (both finite).
void check_gains(const PDGains& gains);

struct BaseState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

  static BaseState identity() { return {}; }
};

struct Contact {
  std::string link;
  Eigen::Vector3d position;
  Eigen::Vector3d force;
};

/// Everything a Task may touch: joint reads, actuation references and base
/// information. Joint order is fixed for the lifetime of the robot, and
/// reads between two world advances come from the same state snapshot.
///
/// References are latched: setting one twice before an advance applies the
/// last value, held for the whole agent period.
class RobotInterface {
 public:
  virtual ~RobotInterface() = default;

  virtual const std::vector<std::string>& joint_names() const = 0;

  virtual ControlMode control_mode(const std::string& joint) const = 0;
  virtual void set_control_mode(const std::string& joint, ControlMode mode) = 0;

  /// Throw LookupError naming the joint when it does not exist.
  virtual double joint_position(const std::string& joint) const = 0;
  virtual double joint_velocity(const std::string& joint) const = 0;

  /// FORCE-mode joints only. Clamped to the joint effort limit when applied.
  virtual void set_joint_force(const std::string& joint, double value) = 0;

  /// POSITION_PD joints only. force = kp (target - q) - kd qd at every
  /// physics tick, then clamped.
  virtual void set_joint_position_target(const std::string& joint, double target,
                                         const PDGains& gains) = 0;

  virtual BaseState base_state() const = 0;

  /// Not yet supported by any backend.
  virtual Eigen::VectorXd sensor_reading(const std::string& sensor) const;
  /// Not yet supported by any backend.
  virtual std::vector<Contact> contacts() const;
};

/// A robot driven by wall-clock time rather than by explicit world
/// advances.
class RealTimeRobot : public RobotInterface {
 public:
  /// Sends the latched references and refreshes the state snapshot to clock
  /// time `now`. Throws CommunicationError on failure.
  virtual void sync(Duration now) = 0;
};

}  // namespace reprogym::robot
