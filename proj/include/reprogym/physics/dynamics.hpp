#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "reprogym/model/robot_model.hpp"

namespace reprogym::physics {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kGravity = 9.81;  // m/s^2, acting downward

/// Point-mass pendulum. q = [theta], theta = 0 hanging straight down.
///
///   theta'' = -(g / L) sin(theta) + tau / (m L^2)
template <typename Scalar>
struct Pendulum {
  Scalar mass;
  Scalar length;
  Scalar gravity = Scalar(kGravity);

  static constexpr Eigen::Index kDof = 1;

  template <typename Q, typename Qd, typename F>
  VectorX<Scalar> acceleration(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<Qd>& /*qd*/,
                               const Eigen::MatrixBase<F>& force) const {
    using std::sin;
    VectorX<Scalar> qdd(1);
    qdd[0] = -(gravity / length) * sin(q[0]) + force[0] / (mass * length * length);
    return qdd;
  }

  template <typename Q, typename Qd>
  Scalar energy(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<Qd>& qd) const {
    using std::cos;
    return Scalar(0.5) * mass * length * length * qd[0] * qd[0] +
           mass * gravity * length * (Scalar(1) - cos(q[0]));
  }
};

/// Cart-pole with the pole modelled as a uniform rod of half-length l
/// (the 4/3 factor). q = [x, theta], theta = 0 upright. Only the cart is
/// actuated; force[1] is ignored.
///
///   theta'' = [g sin(theta) + cos(theta) (-F - m l theta'^2 sin(theta)) / (M + m)]
///             / [l (4/3 - m cos^2(theta) / (M + m))]
///   x''     = [F + m l (theta'^2 sin(theta) - theta'' cos(theta))] / (M + m)
template <typename Scalar>
struct CartPole {
  Scalar cart_mass;
  Scalar pole_mass;
  Scalar half_length;
  Scalar gravity = Scalar(kGravity);

  static constexpr Eigen::Index kDof = 2;

  template <typename Q, typename Qd, typename F>
  VectorX<Scalar> acceleration(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<Qd>& qd,
                               const Eigen::MatrixBase<F>& force) const {
    using std::cos;
    using std::sin;
    const Scalar total = cart_mass + pole_mass;
    const Scalar s = sin(q[1]);
    const Scalar c = cos(q[1]);
    const Scalar w2 = qd[1] * qd[1];
    const Scalar f = force[0];
    const Scalar theta_acc =
        (gravity * s + c * (-f - pole_mass * half_length * w2 * s) / total) /
        (half_length * (Scalar(4) / Scalar(3) - pole_mass * c * c / total));
    VectorX<Scalar> qdd(2);
    qdd[0] = (f + pole_mass * half_length * (w2 * s - theta_acc * c)) / total;
    qdd[1] = theta_acc;
    return qdd;
  }

  /// Kinetic energy of cart and rod plus the rod's potential energy,
  /// zero potential at theta = pi/2.
  template <typename Q, typename Qd>
  Scalar energy(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<Qd>& qd) const {
    using std::cos;
    const Scalar total = cart_mass + pole_mass;
    const Scalar c = cos(q[1]);
    const Scalar kinetic = Scalar(0.5) * total * qd[0] * qd[0] +
                           pole_mass * half_length * c * qd[0] * qd[1] +
                           Scalar(2) / Scalar(3) * pole_mass * half_length * half_length * qd[1] * qd[1];
    return kinetic + pole_mass * gravity * half_length * c;
  }
};

/// Limits and actuation of one generalized coordinate.
struct JointSpec {
  std::string name;
  model::JointKind kind = model::JointKind::Revolute;
  double effort_limit = model::kUnbounded;
  double velocity_limit = model::kUnbounded;
  bool actuated = true;
};

/// Immutable closed-form dynamics compiled from a RobotModel. Shareable
/// across threads.
class DynamicsModel {
 public:
  using Archetype = std::variant<Pendulum<double>, CartPole<double>>;

  DynamicsModel(Archetype archetype, std::vector<JointSpec> joints);

  Eigen::Index dof() const noexcept { return static_cast<Eigen::Index>(joints_.size()); }
  const Archetype& archetype() const noexcept { return archetype_; }
  const std::vector<JointSpec>& joints() const noexcept { return joints_; }
  std::string archetype_name() const;

  Eigen::VectorXd forward_dynamics(const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
                                   const Eigen::VectorXd& force) const;
  double energy(const Eigen::VectorXd& q, const Eigen::VectorXd& qd) const;

 private:
  Archetype archetype_;
  std::vector<JointSpec> joints_;
};

/// Recognizes the supported archetypes:
///   pendulum:  base -(revolute)-> bob, bob mass m at com offset L > 0
///   cart-pole: base -(prismatic)-> cart -(revolute)-> pole, pole centre of
///              mass at half-length l > 0
/// The model must validate and have a fixed base. Throws ValidationError
/// ("unsupported archetype ...") otherwise.
DynamicsModel compile_model(const model::RobotModel& robot);

}  // namespace reprogym::physics
