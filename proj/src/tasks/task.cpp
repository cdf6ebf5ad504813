#include "reprogym/tasks/task.hpp"

#include <cmath>
#include <numbers>

namespace reprogym::tasks {

robot::RobotInterface& Task::robot() const {
  if (robot_ == nullptr) throw StateError("task '" + std::string(id()) + "' is not attached to a robot");
  return *robot_;
}

void Task::check_action(const Eigen::VectorXd& action) const {
  if (!action_space().contains(action)) {
    throw ValidationError("action is outside the action space of '" + std::string(id()) + "'");
  }
}

double wrap_angle(double angle) noexcept {
  const double r = std::remainder(angle, 2.0 * std::numbers::pi);
  return r <= -std::numbers::pi ? r + 2.0 * std::numbers::pi : r;
}

}  // namespace reprogym::tasks
