#pragma once

#include <Eigen/Core>

namespace reprogym::physics {

/// One semi-implicit (symplectic) Euler step; velocity is updated first and
/// the new velocity moves the position.
template <typename Dynamics, typename Scalar>
void semi_implicit_euler_step(const Dynamics& dyn, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& q,
                              Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& qd,
                              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& force, Scalar h) {
  qd += h * dyn.acceleration(q, qd, force);
  q += h * qd;
}

/// One classic four-stage Runge-Kutta step on the first-order system
/// (q, qd)' = (qd, f(q, qd, force)).
template <typename Dynamics, typename Scalar>
void rk4_step(const Dynamics& dyn, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& q,
              Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& qd,
              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& force, Scalar h) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Scalar half = h / Scalar(2);

  const Vec k1q = qd;
  const Vec k1v = dyn.acceleration(q, qd, force);
  const Vec k2q = qd + half * k1v;
  const Vec k2v = dyn.acceleration(q + half * k1q, k2q, force);
  const Vec k3q = qd + half * k2v;
  const Vec k3v = dyn.acceleration(q + half * k2q, k3q, force);
  const Vec k4q = qd + h * k3v;
  const Vec k4v = dyn.acceleration(q + h * k3q, k4q, force);

  q += (h / Scalar(6)) * (k1q + Scalar(2) * k2q + Scalar(2) * k3q + k4q);
  qd += (h / Scalar(6)) * (k1v + Scalar(2) * k2v + Scalar(2) * k3v + k4v);
}

}  // namespace reprogym::physics
