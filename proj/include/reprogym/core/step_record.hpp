#pragma once

#include <string>

#include <Eigen/Core>

namespace reprogym {

/// One transition of a trajectory, as written to a dump.
struct StepRecord {
  double t = 0.0;
  Eigen::VectorXd observation;
  Eigen::VectorXd action;
  double reward = 0.0;
  bool done = false;
};

/// Bitwise comparison of every field (so -0.0 != 0.0 and NaN == NaN).
bool identical(const StepRecord& a, const StepRecord& b) noexcept;

/// One JSON object, keys `t`, `obs`, `act`, `rew`, `done`; no newline.
/// Reals use the shortest representation that round-trips.
std::string to_json_line(const StepRecord& record);

/// Inverse of to_json_line. Throws ParseError(line) on malformed input.
StepRecord step_record_from_json(const std::string& text, std::size_t line = 0);

}  // namespace reprogym
