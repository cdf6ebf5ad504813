#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reprogym/model/diagnostic.hpp"
#include "reprogym/model/robot_model.hpp"

namespace reprogym::model {

struct ParseResult {
  /// Present iff no error diagnostic was produced.
  std::optional<RobotModel> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return model.has_value(); }
};

/// Parses the supported SDF subset:
///
///   model@name, model@canonical_link, static, link@name, inertial/{mass, pose, inertia/{ixx,iyy,izz}},
///   joint@name@type (revolute | prismatic | fixed), parent, child, axis/xyz,
///   axis/limit/{lower, upper, effort, velocity}
///
/// Off-diagonal inertia terms, when present, must be zero. The link centre of
/// mass offset is the z component of inertial/pose. Other elements produce a
/// warning and are ignored. The result is validated before being returned.
ParseResult parse_sdf(std::string_view text);

/// Canonical SDF text for a valid model. parse_sdf(serialize_sdf(m)) == m.
std::string serialize_sdf(const RobotModel& model);

/// Empty iff every RobotModel invariant holds. Diagnostics carry no source
/// location.
std::vector<Diagnostic> validate(const RobotModel& model);

}  // namespace reprogym::model
