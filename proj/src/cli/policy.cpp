#include "reprogym/cli/policy.hpp"

#include <fstream>

#include <json.hpp>

#include "reprogym/core/error.hpp"
#include "reprogym/core/seed.hpp"

namespace reprogym::cli {
namespace {

class ZeroPolicy final : public Policy {
 public:
  explicit ZeroPolicy(Eigen::Index dim) : action_(Eigen::VectorXd::Zero(dim)) {}
  std::optional<Eigen::VectorXd> act(const Eigen::VectorXd&) override { return action_; }

 private:
  Eigen::VectorXd action_;
};

class RandomPolicy final : public Policy {
 public:
  RandomPolicy(Space space, std::uint64_t seed) : space_(std::move(space)), rng_(seed) {}
  std::optional<Eigen::VectorXd> act(const Eigen::VectorXd&) override { return space_.sample(rng_); }

 private:
  Space space_;
  Rng rng_;
};

Eigen::VectorXd to_vector(const nlohmann::json& arr, std::size_t line) {
  if (!arr.is_array()) throw ParseError(line, "action must be an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw ParseError(line, "action must be an array of numbers");
    v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return v;
}

}  // namespace

PolicySpec PolicySpec::parse(const std::string& text) {
  if (text == "zero") return {Kind::Zero, {}};
  if (text == "random") return {Kind::Random, {}};
  constexpr std::string_view kPrefix = "script:";
  if (text.starts_with(kPrefix) && text.size() > kPrefix.size()) {
    return {Kind::Script, text.substr(kPrefix.size())};
  }
  throw ValidationError("invalid policy '" + text + "' (expected zero, random or script:PATH)");
}

std::vector<Eigen::VectorXd> load_action_script(const std::filesystem::path& path,
                                                Eigen::Index action_dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open action script '" + path.string() + "'");
  std::vector<Eigen::VectorXd> actions;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(line, "invalid JSON");
    Eigen::VectorXd a = j.is_object() && j.contains("act") ? to_vector(j["act"], line) : to_vector(j, line);
    if (a.size() != action_dim) {
      throw ValidationError(path.string() + ":" + std::to_string(line) + ": action has dimension " +
                            std::to_string(a.size()) + ", expected " + std::to_string(action_dim));
    }
    actions.push_back(std::move(a));
  }
  return actions;
}

std::optional<Eigen::VectorXd> ScriptPolicy::act(const Eigen::VectorXd&) {
  if (next_ >= actions_.size()) return std::nullopt;
  return actions_[next_++];
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec, const Space& action_space,
                                    std::uint64_t env_seed) {
  switch (spec.kind) {
    case PolicySpec::Kind::Zero:
      return std::make_unique<ZeroPolicy>(static_cast<Eigen::Index>(action_space.dim()));
    case PolicySpec::Kind::Random:
      return std::make_unique<RandomPolicy>(action_space,
                                            SeedTree(env_seed).child(seed_labels::kPolicy));
    case PolicySpec::Kind::Script:
      return std::make_unique<ScriptPolicy>(
          load_action_script(spec.script, static_cast<Eigen::Index>(action_space.dim())));
  }
  throw ContractViolation("unhandled policy kind");
}

}  // namespace reprogym::cli
