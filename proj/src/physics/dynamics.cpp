#include "reprogym/physics/dynamics.hpp"

#include <cstring>

#include "reprogym/core/error.hpp"
#include "reprogym/model/sdf.hpp"
#include "reprogym/physics/state.hpp"

namespace reprogym::physics {

bool identical(const PhysicsState& a, const PhysicsState& b) noexcept {
  auto same = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return x.size() == y.size() &&
           std::memcmp(x.data(), y.data(), sizeof(double) * static_cast<std::size_t>(x.size())) == 0;
  };
  return a.sim_time == b.sim_time && same(a.q, b.q) && same(a.qd, b.qd);
}

DynamicsModel::DynamicsModel(Archetype archetype, std::vector<JointSpec> joints)
    : archetype_(std::move(archetype)), joints_(std::move(joints)) {
  const Eigen::Index expected =
      std::visit([](const auto& a) { return std::decay_t<decltype(a)>::kDof; }, archetype_);
  if (dof() != expected) {
    throw ValidationError("dynamics model needs " + std::to_string(expected) + " joint specs, got " +
                          std::to_string(joints_.size()));
  }
}

std::string DynamicsModel::archetype_name() const {
  return std::holds_alternative<Pendulum<double>>(archetype_) ? "pendulum" : "cart-pole";
}

Eigen::VectorXd DynamicsModel::forward_dynamics(const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
                                                const Eigen::VectorXd& force) const {
  return std::visit([&](const auto& a) { return a.acceleration(q, qd, force); }, archetype_);
}

double DynamicsModel::energy(const Eigen::VectorXd& q, const Eigen::VectorXd& qd) const {
  return std::visit([&](const auto& a) { return a.energy(q, qd); }, archetype_);
}

namespace {

[[noreturn]] void unsupported(const std::string& why) {
  throw ValidationError(
      "unsupported archetype (" + why +
      "); recognized patterns: pendulum = base -(revolute)-> bob; "
      "cart-pole = base -(prismatic)-> cart -(revolute)-> pole");
}

JointSpec spec_of(const model::Joint& j, bool actuated) {
  return {j.name, j.kind, j.limits.effort, j.limits.velocity, actuated};
}

}  // namespace

DynamicsModel compile_model(const model::RobotModel& robot) {
  if (const auto issues = model::validate(robot); !issues.empty()) {
    throw ValidationError("cannot compile invalid model '" + robot.name + "': " + issues.front().message);
  }
  if (!robot.fixed_base) unsupported("floating base");
  const auto moving = robot.moving_joints();
  if (robot.joints.size() != moving.size()) unsupported("fixed joints are not supported");

  if (moving.size() == 1 && robot.links.size() == 2) {
    const auto& hinge = *moving[0];
    if (hinge.kind != model::JointKind::Revolute || hinge.parent != robot.base_link) {
      unsupported("single joint must be revolute from the base");
    }
    const auto& bob = *robot.find_link(hinge.child);
    if (!(bob.com_offset > 0.0)) unsupported("pendulum link needs a positive com offset");
    return DynamicsModel(Pendulum<double>{bob.mass, bob.com_offset}, {spec_of(hinge, true)});
  }

  if (moving.size() == 2 && robot.links.size() == 3) {
    const auto& slider = *moving[0];
    const auto& hinge = *moving[1];
    if (slider.kind != model::JointKind::Prismatic || slider.parent != robot.base_link ||
        hinge.kind != model::JointKind::Revolute || hinge.parent != slider.child) {
      unsupported("expected prismatic base->cart then revolute cart->pole");
    }
    const auto& cart = *robot.find_link(slider.child);
    const auto& pole = *robot.find_link(hinge.child);
    if (!(pole.com_offset > 0.0)) unsupported("pole link needs a positive com offset");
    return DynamicsModel(CartPole<double>{cart.mass, pole.mass, pole.com_offset},
                         {spec_of(slider, true), spec_of(hinge, false)});
  }

  unsupported(std::to_string(robot.links.size()) + " links, " + std::to_string(moving.size()) +
              " moving joints");
}

}  // namespace reprogym::physics
