#include "reprogym/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reprogym/cli/policy.hpp"
#include "reprogym/core/error.hpp"
#include "reprogym/core/seed.hpp"
#include "reprogym/core/trajectory.hpp"
#include "reprogym/model/sdf.hpp"
#include "reprogym/runtime/registry.hpp"
#include "reprogym/runtime/vector_env.hpp"

namespace reprogym::cli {
namespace {

using runtime::SimulatedRuntime;

/// Raised for bad flag values; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RolloutOptions {
  std::string env = "cartpole-balance";
  std::string engine = "euler-si";
  std::uint64_t seed = 0;
  std::int64_t steps = 500;
  double rtf = 0.0;
  bool exact_init = false;
  bool inject_fault = false;
};

struct RolloutSummary {
  double total_reward = 0.0;
  std::int64_t steps = 0;
  std::int64_t episodes = 0;
  std::string terminal_reason = "none";
};

std::string id_list() {
  std::string s;
  for (const auto& id : runtime::env_ids()) s += "  " + id + "\n";
  return s;
}

physics::EngineId parse_engine(const std::string& name) {
  const auto id = physics::engine_from_string(name);
  if (!id) throw UsageError("unknown engine '" + name + "' (expected euler-si or rk4)");
  return *id;
}

void check_env(const std::string& env) {
  try {
    runtime::env_spec(env);
  } catch (const LookupError&) {
    throw UsageError("unknown environment '" + env + "'; registered environments:\n" + id_list());
  }
}

std::unique_ptr<SimulatedRuntime> build_env(const RolloutOptions& opt) {
  check_env(opt.env);
  auto config = runtime::default_config(opt.env);
  config.engine = parse_engine(opt.engine);
  config.seed = opt.seed;
  config.rtf = opt.rtf;
  try {
    config.validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  return runtime::make_env(opt.env, config, tasks::TaskOptions{opt.exact_init});
}

DumpHeader header_for(const SimulatedRuntime& env, const RolloutOptions& opt) {
  DumpHeader h;
  h.env_id = env.metadata().id;
  h.engine = std::string(physics::to_string(env.config().engine));
  h.seed = opt.seed;
  h.physics_dt = to_seconds(env.config().physics_dt);
  h.agent_period = to_seconds(env.config().agent_period);
  h.exact_init = opt.exact_init;
  return h;
}

/// Perturbs actions with nondeterministic noise. Only reachable through the
/// hidden --inject-fault flag, as a negative control for determinism checks.
Eigen::VectorXd inject_noise(Eigen::VectorXd action, const Space& space) {
  static std::random_device device;
  std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
  for (Eigen::Index i = 0; i < action.size(); ++i) {
    action[i] = std::clamp(action[i] + noise(device), space.low()[i], space.high()[i]);
  }
  return action;
}

/// Runs up to opt.steps agent steps, resetting after every finished episode.
RolloutSummary rollout(SimulatedRuntime& env, const RolloutOptions& opt, Policy& policy,
                       std::ostream* dump) {
  std::optional<TrajectoryWriter> writer;
  if (dump) {
    writer.emplace(*dump);
    writer->write_header(header_for(env, opt));
  }
  RolloutSummary summary;
  Eigen::VectorXd obs = env.reset();
  bool in_episode = true;
  while (summary.steps < opt.steps) {
    if (!in_episode) {
      obs = env.reset();
      in_episode = true;
    }
    auto action = policy.act(obs);
    if (!action) break;
    if (opt.inject_fault) *action = inject_noise(std::move(*action), env.metadata().action_space);
    const auto result = env.step(*action);
    ++summary.steps;
    summary.total_reward += result.reward;
    if (writer) writer->write(*env.last_record());
    obs = result.observation;
    if (result.done) {
      ++summary.episodes;
      summary.terminal_reason = result.info.termination;
      in_episode = false;
    }
  }
  if (in_episode && summary.steps > 0) {
    ++summary.episodes;
    summary.terminal_reason = "step_budget";
  }
  return summary;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("cannot write '" + path + "'");
}

int cmd_run(const RolloutOptions& opt, const std::string& policy_text, const std::string& dump_path,
            std::ostream& out) {
  if (opt.steps <= 0) throw UsageError("--steps must be positive");
  PolicySpec spec;
  try {
    spec = PolicySpec::parse(policy_text);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  auto env = build_env(opt);
  std::unique_ptr<Policy> policy;
  try {
    policy = make_policy(spec, env->metadata().action_space, opt.seed);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  std::ostringstream dump;
  const auto summary = rollout(*env, opt, *policy, dump_path.empty() ? nullptr : &dump);
  if (!dump_path.empty()) write_file(dump_path, dump.str());
  out << "env: " << opt.env << "\n"
      << "total reward: " << format_number(summary.total_reward) << "\n"
      << "steps: " << summary.steps << "\n"
      << "episodes: " << summary.episodes << "\n"
      << "terminal reason: " << summary.terminal_reason << "\n";
  return kOk;
}

/// Index of the first step whose dump line differs, counting the header as
/// line 0.
std::int64_t first_divergence(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  std::int64_t line = 0;
  while (true) {
    const bool ga = static_cast<bool>(std::getline(sa, la));
    const bool gb = static_cast<bool>(std::getline(sb, lb));
    if (!ga && !gb) return -1;
    if (ga != gb || la != lb) return line - 1;
    ++line;
  }
}

int cmd_verify(RolloutOptions opt, int repeats, std::ostream& out) {
  if (repeats < 2) throw UsageError("--repeats must be >= 2");
  if (opt.steps <= 0) throw UsageError("--steps must be positive");
  auto probe = build_env(opt);
  const Space& space = probe->metadata().action_space;
  Rng rng(SeedTree(opt.seed).child(seed_labels::kPolicy));
  std::vector<Eigen::VectorXd> script;
  script.reserve(static_cast<std::size_t>(opt.steps));
  for (std::int64_t i = 0; i < opt.steps; ++i) script.push_back(space.sample(rng));

  std::string reference;
  for (int r = 0; r < repeats; ++r) {
    auto env = build_env(opt);
    ScriptPolicy policy(script);
    std::ostringstream dump;
    rollout(*env, opt, policy, &dump);
    if (r == 0) {
      reference = dump.str();
      continue;
    }
    const auto step = first_divergence(reference, dump.str());
    if (step >= 0) {
      out << "NONDETERMINISTIC: repeat " << r << " diverges from repeat 0 at step " << step << "\n";
      return kFailure;
    }
  }
  out << "deterministic: " << repeats << " repeats of " << opt.steps << " steps on " << opt.env
      << " produced identical dumps\n";
  return kOk;
}

int cmd_benchmark(const RolloutOptions& opt, int parallel, std::ostream& out) {
  if (opt.steps <= 0) throw UsageError("--steps must be positive");
  if (parallel < 1) throw UsageError("--parallel must be >= 1");
  RolloutOptions fast = opt;
  fast.rtf = 0.0;
  auto env = build_env(fast);
  const Duration period = env->config().agent_period;
  const std::int64_t ticks_per_step = env->config().ticks_per_step();

  std::int64_t steps = 0;
  const auto start = std::chrono::steady_clock::now();
  if (parallel == 1) {
    auto policy = make_policy({PolicySpec::Kind::Random, {}}, env->metadata().action_space, opt.seed);
    steps = rollout(*env, fast, *policy, nullptr).steps;
  } else {
    runtime::VectorEnv venv(opt.env, static_cast<std::size_t>(parallel), opt.seed, env->config(),
                            static_cast<std::size_t>(parallel), tasks::TaskOptions{opt.exact_init});
    Rng rng(SeedTree(opt.seed).child(seed_labels::kPolicy));
    const Space& space = env->metadata().action_space;
    venv.reset();
    std::vector<Eigen::VectorXd> actions(venv.size());
    const std::int64_t target = opt.steps * parallel;
    while (steps < target) {
      for (auto& a : actions) a = space.sample(rng);
      for (const auto& r : venv.step(actions)) {
        if (r.error) throw Error("instance failed: " + *r.error);
        if (!r.reset) ++steps;
      }
    }
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double sim = to_seconds(period) * static_cast<double>(steps);
  const double ticks = static_cast<double>(steps * ticks_per_step);

  nlohmann::json report;
  report["env"] = opt.env;
  report["engine"] = std::string(physics::to_string(env->config().engine));
  report["parallel"] = parallel;
  report["steps"] = steps;
  report["wall_seconds"] = wall;
  report["sim_seconds"] = sim;
  report["achieved_rtf"] = sim / wall;
  report["ticks_per_second"] = ticks / wall;
  out << report.dump() << "\n";
  out << steps << " steps (" << format_number(sim) << " simulated s) in " << format_number(wall)
      << " wall s: rtf " << format_number(sim / wall) << ", " << format_number(ticks / wall)
      << " physics ticks/s\n";
  return kOk;
}

std::string describe_mismatch(const StepRecord& want, const StepRecord& got) {
  if (want.t != got.t) return "t";
  if (want.observation.size() != got.observation.size() ||
      !(want.observation.array() == got.observation.array()).all()) {
    return "obs";
  }
  if (want.reward != got.reward) return "rew";
  if (want.done != got.done) return "done";
  return "bit pattern";
}

int cmd_replay(const std::string& path, std::optional<std::string> env_flag,
               std::optional<std::uint64_t> seed_flag, std::optional<std::string> engine_flag,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open dump '" + path + "'");
  Trajectory traj;
  try {
    traj = read_trajectory(in);
  } catch (const ParseError& e) {
    err << path << ":" << e.line() << ": parse error: " << e.what() << "\n";
    return kFailure;
  }
  if (!traj.header) throw UsageError("dump '" + path + "' has no header line");
  const DumpHeader& h = *traj.header;
  if (h.version != kFrameworkVersion) {
    throw UsageError("dump was written by version " + h.version + ", this is " + kFrameworkVersion);
  }
  if (env_flag && *env_flag != h.env_id) {
    throw UsageError("--env " + *env_flag + " does not match the dump (" + h.env_id + ")");
  }
  if (seed_flag && *seed_flag != h.seed) {
    throw UsageError("--seed " + std::to_string(*seed_flag) + " does not match the dump (" +
                     std::to_string(h.seed) + ")");
  }
  if (engine_flag && *engine_flag != h.engine) {
    throw UsageError("--engine " + *engine_flag + " does not match the dump (" + h.engine + ")");
  }

  RolloutOptions opt;
  opt.env = h.env_id;
  opt.engine = h.engine;
  opt.seed = h.seed;
  opt.exact_init = h.exact_init;
  auto env = build_env(opt);
  if (to_seconds(env->config().physics_dt) != h.physics_dt ||
      to_seconds(env->config().agent_period) != h.agent_period) {
    throw UsageError("dump timing does not match environment '" + h.env_id + "'");
  }

  env->reset();
  bool needs_reset = false;
  for (std::size_t k = 0; k < traj.records.size(); ++k) {
    const StepRecord& want = traj.records[k];
    if (needs_reset) env->reset();
    try {
      env->step(want.action);
    } catch (const Error& e) {
      out << "MISMATCH at step " << k << ": recorded action rejected: " << e.what() << "\n";
      return kFailure;
    }
    const StepRecord& got = *env->last_record();
    if (!identical(want, got)) {
      out << "MISMATCH at step " << k << ": field " << describe_mismatch(want, got) << " differs\n";
      return kFailure;
    }
    needs_reset = got.done;
  }
  out << "replay ok: " << traj.records.size() << " steps of " << h.env_id << " reproduced exactly\n";
  return kOk;
}

int cmd_parse(const std::string& path, bool print, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const auto result = model::parse_sdf(text.str());
  for (const auto& d : result.diagnostics) out << d.format(path) << "\n";
  if (!result.ok()) return kFailure;
  if (print) out << model::serialize_sdf(*result.model);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"reprogym: reproducible robot learning environments"};
  app.require_subcommand(1);

  RolloutOptions opt;
  std::string policy = "zero";
  std::string dump;
  int repeats = 3;
  int parallel = 1;

  auto add_env_flags = [&](CLI::App* cmd) {
    cmd->add_option("--env", opt.env, "environment id");
    cmd->add_option("--engine", opt.engine, "physics engine: euler-si or rk4");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--steps", opt.steps, "agent steps");
    cmd->add_flag("--exact-init", opt.exact_init, "start from the noise-free initial state");
  };

  auto* run = app.add_subcommand("run", "run a rollout and print the episode summary");
  add_env_flags(run);
  run->add_option("--rtf", opt.rtf, "real-time factor, 0 = as fast as possible");
  run->add_option("--policy", policy, "zero, random or script:PATH");
  run->add_option("--dump", dump, "write the trajectory as JSON-Lines");

  auto* verify = app.add_subcommand("verify-determinism", "repeat a random rollout and compare dumps");
  add_env_flags(verify);
  verify->add_option("--repeats", repeats, "number of rollouts (>= 2)");
  verify->add_flag("--inject-fault", opt.inject_fault)->group("");

  auto* bench = app.add_subcommand("benchmark", "measure throughput at unbounded rtf");
  add_env_flags(bench);
  bench->add_option("--parallel", parallel, "instances stepped through a vector env");

  std::string replay_path;
  std::optional<std::string> replay_env, replay_engine;
  std::optional<std::uint64_t> replay_seed;
  auto* replay = app.add_subcommand("replay", "re-apply a dump's actions and compare bit-exactly");
  replay->add_option("dump", replay_path, "dump file")->required();
  replay->add_option("--env", replay_env, "expected environment id");
  replay->add_option("--seed", replay_seed, "expected seed");
  replay->add_option("--engine", replay_engine, "expected engine");

  std::string model_path;
  bool print = false;
  auto* parse = app.add_subcommand("parse", "parse and validate a model file");
  parse->add_option("model", model_path, "SDF file")->required();
  parse->add_flag("--print", print, "echo the canonical serialization");

  bench->callback([&] {
    if (opt.steps == 500 && bench->count("--steps") == 0) opt.steps = 10000;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*run) return cmd_run(opt, policy, dump, out);
    if (*verify) return cmd_verify(opt, repeats, out);
    if (*bench) return cmd_benchmark(opt, parallel, out);
    if (*replay) return cmd_replay(replay_path, replay_env, replay_seed, replay_engine, out, err);
    if (*parse) return cmd_parse(model_path, print, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace reprogym::cli
