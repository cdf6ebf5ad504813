#include "reprogym/robot/robot.hpp"

#include <cmath>

namespace reprogym::robot {

void check_gains(const PDGains& gains) {
  if (!(gains.kp >= 0.0) || !(gains.kd >= 0.0) || !std::isfinite(gains.kp) ||
      !std::isfinite(gains.kd)) {
    throw ValidationError("PD gains must be finite and non-negative");
  }
}

Eigen::VectorXd RobotInterface::sensor_reading(const std::string& sensor) const {
  throw NotSupportedError("sensor '" + sensor + "': sensors are not supported");
}

std::vector<Contact> RobotInterface::contacts() const {
  throw NotSupportedError("contacts are not supported");
}

}  // namespace reprogym::robot
