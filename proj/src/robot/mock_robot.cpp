#include "reprogym/robot/mock_robot.hpp"

#include <algorithm>

namespace reprogym::robot {

MockRobot::MockRobot(std::vector<std::string> joints, std::vector<MockFrame> script)
    : joints_(std::move(joints)), script_(std::move(script)) {
  if (script_.empty()) throw ValidationError("mock robot needs at least one frame");
  for (const auto& f : script_) {
    if (f.positions.size() != joints_.size() || f.velocities.size() != joints_.size()) {
      throw ValidationError("mock frame size does not match the joint list");
    }
  }
  modes_.assign(joints_.size(), ControlMode::Force);
  forces_.assign(joints_.size(), 0.0);
}

std::size_t MockRobot::index_of(const std::string& joint) const {
  const auto it = std::find(joints_.begin(), joints_.end(), joint);
  if (it == joints_.end()) throw LookupError("unknown joint '" + joint + "'");
  return static_cast<std::size_t>(it - joints_.begin());
}

ControlMode MockRobot::control_mode(const std::string& joint) const {
  return modes_[index_of(joint)];
}

void MockRobot::set_control_mode(const std::string& joint, ControlMode mode) {
  modes_[index_of(joint)] = mode;
}

double MockRobot::joint_position(const std::string& joint) const {
  return script_[frame_].positions[index_of(joint)];
}

double MockRobot::joint_velocity(const std::string& joint) const {
  return script_[frame_].velocities[index_of(joint)];
}

void MockRobot::set_joint_force(const std::string& joint, double value) {
  const auto i = index_of(joint);
  if (modes_[i] != ControlMode::Force) {
    throw ControlModeError("joint '" + joint + "' is not in FORCE mode");
  }
  forces_[i] = value;
  ++commands_;
}

void MockRobot::set_joint_position_target(const std::string& joint, double /*target*/,
                                          const PDGains& gains) {
  const auto i = index_of(joint);
  if (modes_[i] != ControlMode::PositionPD) {
    throw ControlModeError("joint '" + joint + "' is not in POSITION_PD mode");
  }
  check_gains(gains);
  ++commands_;
}

void MockRobot::advance() noexcept {
  if (frame_ + 1 < script_.size()) ++frame_;
}

double MockRobot::latched_force(const std::string& joint) const { return forces_[index_of(joint)]; }

}  // namespace reprogym::robot
