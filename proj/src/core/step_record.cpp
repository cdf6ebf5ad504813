#include "reprogym/core/step_record.hpp"

#include <cstring>

#include <json.hpp>

#include "reprogym/core/error.hpp"

namespace reprogym {
namespace {

bool same_bits(double a, double b) noexcept {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

bool same_bits(const Eigen::VectorXd& a, const Eigen::VectorXd& b) noexcept {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i], b[i])) return false;
  }
  return true;
}

nlohmann::json to_array(const Eigen::VectorXd& v) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd from_array(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.is_array()) throw ParseError(line, std::string("'") + key + "' is not an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(line, std::string("'") + key + "' holds a non-number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

}  // namespace

bool identical(const StepRecord& a, const StepRecord& b) noexcept {
  return same_bits(a.t, b.t) && same_bits(a.observation, b.observation) &&
         same_bits(a.action, b.action) && same_bits(a.reward, b.reward) && a.done == b.done;
}

std::string to_json_line(const StepRecord& record) {
  nlohmann::json j;
  j["t"] = record.t;
  j["obs"] = to_array(record.observation);
  j["act"] = to_array(record.action);
  j["rew"] = record.reward;
  j["done"] = record.done;
  return j.dump();
}

StepRecord step_record_from_json(const std::string& text, std::size_t line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(line, "step record is not a JSON object");
  for (const char* key : {"t", "obs", "act", "rew", "done"}) {
    if (!j.contains(key)) throw ParseError(line, std::string("missing key '") + key + "'");
  }
  if (j.size() != 5) throw ParseError(line, "unexpected keys in step record");
  if (!j["t"].is_number() || !j["rew"].is_number() || !j["done"].is_boolean()) {
    throw ParseError(line, "step record field has the wrong type");
  }
  StepRecord r;
  r.t = j["t"].get<double>();
  r.observation = from_array(j["obs"], "obs", line);
  r.action = from_array(j["act"], "act", line);
  r.reward = j["rew"].get<double>();
  r.done = j["done"].get<bool>();
  return r;
}

}  // namespace reprogym
