#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reprogym/core/step_record.hpp"

namespace reprogym {

inline constexpr const char* kFrameworkVersion = "0.3.0";

/// Provenance written as the first line of a dump so replay can refuse
/// incompatible inputs.
struct DumpHeader {
  std::string version = kFrameworkVersion;
  std::string env_id;
  std::string engine;
  std::uint64_t seed = 0;
  double physics_dt = 0.0;
  double agent_period = 0.0;
  bool exact_init = false;

  friend bool operator==(const DumpHeader&, const DumpHeader&) = default;
};

std::string to_json_line(const DumpHeader& header);

struct Trajectory {
  std::optional<DumpHeader> header;
  std::vector<StepRecord> records;
};

/// Streams a dump as JSON-Lines.
class TrajectoryWriter {
 public:
  explicit TrajectoryWriter(std::ostream& out) : out_(&out) {}

  void write_header(const DumpHeader& header);
  void write(const StepRecord& record);

 private:
  std::ostream* out_;
};

/// Reads a dump. The header line is optional. Throws ParseError naming the
/// 1-based line of the first malformed entry, including a truncated last
/// line.
Trajectory read_trajectory(std::istream& in);

}  // namespace reprogym
