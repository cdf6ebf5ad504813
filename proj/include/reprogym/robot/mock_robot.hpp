#pragma once

#include <cstddef>

#include "reprogym/robot/robot.hpp"

namespace reprogym::robot {

/// Joint positions and velocities for one world advance, in joint order.
struct MockFrame {
  std::vector<double> positions;
  std::vector<double> velocities;
};

/// Scripted robot: reads replay a fixed sequence of frames, one per
/// advance(), holding the last frame once the script is exhausted.
/// References are recorded, never acted on.
class MockRobot final : public RobotInterface {
 public:
  MockRobot(std::vector<std::string> joints, std::vector<MockFrame> script);

  const std::vector<std::string>& joint_names() const override { return joints_; }
  ControlMode control_mode(const std::string& joint) const override;
  void set_control_mode(const std::string& joint, ControlMode mode) override;
  double joint_position(const std::string& joint) const override;
  double joint_velocity(const std::string& joint) const override;
  void set_joint_force(const std::string& joint, double value) override;
  void set_joint_position_target(const std::string& joint, double target,
                                 const PDGains& gains) override;
  BaseState base_state() const override { return BaseState::identity(); }

  void advance() noexcept;
  void rewind() noexcept { frame_ = 0; }
  std::size_t frame() const noexcept { return frame_; }

  /// Last force latched on `joint` (0 when none).
  double latched_force(const std::string& joint) const;
  std::size_t command_count() const noexcept { return commands_; }

 private:
  std::size_t index_of(const std::string& joint) const;

  std::vector<std::string> joints_;
  std::vector<MockFrame> script_;
  std::vector<ControlMode> modes_;
  std::vector<double> forces_;
  std::size_t frame_ = 0;
  std::size_t commands_ = 0;
};

}  // namespace reprogym::robot
