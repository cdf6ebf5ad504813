#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace reprogym::model {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct Link {
  std::string name;
  double mass = 0.0;                                    // kg
  Eigen::Vector3d inertia_diag = Eigen::Vector3d::Zero();  // kg m^2
  double com_offset = 0.0;                              // m, along the parent joint frame z

  friend bool operator==(const Link&, const Link&) = default;
};

enum class JointKind { Revolute, Prismatic, Fixed };

const char* to_string(JointKind kind) noexcept;

/// Absent limits are infinite (lower = -inf, the others +inf).
struct JointLimits {
  double lower = -kUnbounded;
  double upper = kUnbounded;
  double effort = kUnbounded;
  double velocity = kUnbounded;

  bool unbounded() const noexcept;

  friend bool operator==(const JointLimits&, const JointLimits&) = default;
};

struct Joint {
  std::string name;
  JointKind kind = JointKind::Fixed;
  std::string parent;
  std::string child;
  /// Unit vector for moving joints, zero for FIXED.
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  JointLimits limits;

  friend bool operator==(const Joint&, const Joint&) = default;
};

struct RobotModel {
  std::string name;
  std::vector<Link> links;
  std::vector<Joint> joints;
  std::string base_link;
  bool fixed_base = true;

  /// Number of non-FIXED joints.
  std::size_t dof() const noexcept;

  /// Non-FIXED joints in declaration order; index i is generalized
  /// coordinate i.
  std::vector<const Joint*> moving_joints() const;

  const Link* find_link(const std::string& name) const noexcept;
  const Joint* find_joint(const std::string& name) const noexcept;

  friend bool operator==(const RobotModel&, const RobotModel&) = default;
};

}  // namespace reprogym::model
