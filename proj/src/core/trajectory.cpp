#include "reprogym/core/trajectory.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "reprogym/core/error.hpp"

namespace reprogym {

std::string to_json_line(const DumpHeader& header) {
  nlohmann::json h;
  h["version"] = header.version;
  h["env"] = header.env_id;
  h["engine"] = header.engine;
  h["seed"] = header.seed;
  h["physics_dt"] = header.physics_dt;
  h["agent_period"] = header.agent_period;
  h["exact_init"] = header.exact_init;
  nlohmann::json j;
  j["header"] = std::move(h);
  return j.dump();
}

void TrajectoryWriter::write_header(const DumpHeader& header) {
  *out_ << to_json_line(header) << '\n';
}

void TrajectoryWriter::write(const StepRecord& record) {
  *out_ << to_json_line(record) << '\n';
}

namespace {

DumpHeader parse_header(const nlohmann::json& h, std::size_t line) {
  try {
    DumpHeader header;
    header.version = h.at("version").get<std::string>();
    header.env_id = h.at("env").get<std::string>();
    header.engine = h.at("engine").get<std::string>();
    header.seed = h.at("seed").get<std::uint64_t>();
    header.physics_dt = h.at("physics_dt").get<double>();
    header.agent_period = h.at("agent_period").get<double>();
    header.exact_init = h.at("exact_init").get<bool>();
    return header;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line, std::string("bad dump header: ") + e.what());
  }
}

}  // namespace

Trajectory read_trajectory(std::istream& in) {
  Trajectory traj;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    // A line without its terminating newline is a truncated write.
    if (in.eof()) {
      if (text.empty()) break;
      throw ParseError(line, "truncated line (missing newline)");
    }
    if (text.empty()) continue;
    if (line == 1 && text.rfind("{\"header\"", 0) == 0) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line, std::string("malformed JSON: ") + e.what());
      }
      traj.header = parse_header(j.at("header"), line);
      continue;
    }
    traj.records.push_back(step_record_from_json(text, line));
  }
  return traj;
}

}  // namespace reprogym
