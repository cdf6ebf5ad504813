#include <doctest.h>

#include <cmath>

#include "../support/support.hpp"

using namespace reprogym;
using namespace reprogym::robot;
using physics::EngineId;

namespace {

const Duration kMs = std::chrono::milliseconds(1);

SimulatedRobot cartpole(EngineId engine = EngineId::EulerSemiImplicit) {
  SimulatedRobot r(runtime::load_dynamics("cartpole-balance"), engine, kMs);
  physics::PhysicsState s;
  s.q = Eigen::VectorXd::Zero(2);
  s.qd = Eigen::VectorXd::Zero(2);
  r.reset_state(s);
  return r;
}

SimulatedRobot pendulum() {
  SimulatedRobot r(runtime::load_dynamics("pendulum-swingup"), EngineId::EulerSemiImplicit, kMs);
  physics::PhysicsState s;
  s.q = Eigen::VectorXd::Zero(1);
  s.qd = Eigen::VectorXd::Zero(1);
  r.reset_state(s);
  return r;
}

}  // namespace

TEST_CASE("joint reads on a reset cart-pole") {
  auto r = cartpole();
  CHECK(r.joint_names() == std::vector<std::string>{"cart_joint", "pole_joint"});
  CHECK(r.joint_position("pole_joint") == 0.0);
  CHECK(r.joint_velocity("cart_joint") == 0.0);
  CHECK(r.joint_position("pole_joint") == r.joint_position("pole_joint"));
  CHECK_THROWS_AS(r.joint_position("elbow"), LookupError);
  CHECK_THROWS_AS(r.set_joint_force("elbow", 1.0), LookupError);
}

TEST_CASE("effort limit clamps the applied force") {
  auto r = cartpole();
  r.set_joint_force("cart_joint", 1e9);
  r.advance(1);
  CHECK(r.applied_force()[0] == 100.0);
  CHECK(r.effort_clamped());
  r.clear_flags();
  r.set_joint_force("cart_joint", -50.0);
  r.advance(1);
  CHECK(r.applied_force()[0] == -50.0);
  CHECK_FALSE(r.effort_clamped());
}

TEST_CASE("velocity limit clamps the joint velocity") {
  auto r = pendulum();
  r.set_joint_force("hinge", 2.0);
  physics::PhysicsState fast;
  fast.q = Eigen::VectorXd::Zero(1);
  fast.qd = Eigen::VectorXd::Constant(1, 7.999);
  r.reset_state(fast);
  r.set_joint_force("hinge", 2.0);
  r.advance(5);
  CHECK(r.joint_velocity("hinge") <= 8.0);
  CHECK(r.velocity_clamped());
}

TEST_CASE("passive joints refuse commands") {
  auto r = cartpole();
  CHECK_THROWS_AS(r.set_joint_force("pole_joint", 1.0), ControlModeError);
  CHECK_THROWS_AS(r.set_control_mode("pole_joint", ControlMode::PositionPD), ControlModeError);
}

TEST_CASE("references must match the control mode") {
  auto r = pendulum();
  CHECK(r.control_mode("hinge") == ControlMode::Force);
  CHECK_THROWS_AS(r.set_joint_position_target("hinge", 0.1, {10, 1}), ControlModeError);
  r.set_control_mode("hinge", ControlMode::PositionPD);
  CHECK_THROWS_AS(r.set_joint_force("hinge", 1.0), ControlModeError);
  CHECK_THROWS_AS(r.set_joint_position_target("hinge", 0.1, {-1, 1}), ValidationError);
  CHECK_THROWS_AS(r.set_joint_position_target("hinge", 0.1, {1, std::nan("")}), ValidationError);
}

TEST_CASE("PD at its target with zero velocity produces no force") {
  auto r = pendulum();
  r.set_control_mode("hinge", ControlMode::PositionPD);
  r.set_joint_position_target("hinge", 0.0, {50, 5});
  r.advance(1);
  CHECK(r.applied_force()[0] == 0.0);
  CHECK(r.joint_position("hinge") == 0.0);
}

TEST_CASE("pendulum PD settles near its target") {
  auto r = pendulum();
  r.set_control_mode("hinge", ControlMode::PositionPD);
  r.set_joint_position_target("hinge", 0.2, {50, 5});
  r.advance(5000);
  // Torque-limited PD under gravity: the oracle rollout settles 0.0327 short.
  CHECK(std::abs(r.joint_position("hinge") - 0.2) < 0.05);
  CHECK(std::abs(r.joint_position("hinge") - 0.2) == doctest::Approx(0.0327).epsilon(0.01));
}

TEST_CASE("reset clears references") {
  auto r = pendulum();
  r.set_joint_force("hinge", 1.5);
  physics::PhysicsState s;
  s.q = Eigen::VectorXd::Zero(1);
  s.qd = Eigen::VectorXd::Zero(1);
  r.reset_state(s);
  r.advance(10);
  CHECK(r.joint_position("hinge") == 0.0);
}

TEST_CASE("sync advances whole physics ticks from the clock origin") {
  auto r = cartpole();
  physics::PhysicsState s;
  s.q = Eigen::VectorXd::Zero(2);
  s.qd = Eigen::VectorXd::Zero(2);
  r.reset_state(s, std::chrono::seconds(3));
  r.sync(std::chrono::seconds(3) + std::chrono::microseconds(2500));
  CHECK(r.state().sim_time == std::chrono::milliseconds(2));
  r.sync(std::chrono::seconds(3) + std::chrono::milliseconds(20));
  CHECK(r.state().sim_time == std::chrono::milliseconds(20));
  r.sync(std::chrono::seconds(3));
  CHECK(r.state().sim_time == std::chrono::milliseconds(20));
}

TEST_CASE("fixed-base robots report the identity base pose") {
  const auto r = cartpole();
  const auto b = r.base_state();
  CHECK(b.position.isZero());
  CHECK(b.orientation.norm() == 1.0);
  CHECK(b.orientation.isApprox(Eigen::Quaterniond::Identity()));
  CHECK_THROWS_AS(r.sensor_reading("imu"), NotSupportedError);
  CHECK_THROWS_AS(r.contacts(), NotSupportedError);
}

TEST_CASE("mock robot replays its script") {
  MockRobot m({"a", "b"}, {{{0.3, 1.0}, {0.0, 0.0}}, {{0.4, 2.0}, {1.0, 0.0}}});
  CHECK(m.joint_position("a") == 0.3);
  m.advance();
  CHECK(m.joint_position("b") == 2.0);
  CHECK(m.joint_velocity("a") == 1.0);
  m.advance();
  CHECK(m.frame() == 1);
  m.set_joint_force("a", 4.0);
  CHECK(m.latched_force("a") == 4.0);
  CHECK(m.command_count() == 1);
  m.rewind();
  CHECK(m.joint_position("a") == 0.3);
  CHECK_THROWS_AS(m.joint_position("elbow"), LookupError);
  CHECK_THROWS_AS(MockRobot({"a"}, {}), ValidationError);
  CHECK_THROWS_AS(MockRobot({"a"}, {{{1.0, 2.0}, {0.0}}}), ValidationError);
}
