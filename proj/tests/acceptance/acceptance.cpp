// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include <unistd.h>

#include <json.hpp>

#include "../support/support.hpp"
#include "reprogym/model/sdf.hpp"
#include "reprogym/physics/integrators.hpp"
#include "reprogym/runtime/vector_env.hpp"

namespace {

using namespace reprogym;
using namespace reprogym::testing;
using physics::EngineId;

struct Verdict {
  bool pass = false;
  std::string detail;
};

const std::vector<std::string> kEnvs = {"cartpole-balance", "cartpole-swingup", "pendulum-swingup"};

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("reprogym-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict reproducibility() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto dir = scratch_dir();
  for (const auto& env : kEnvs) {
    auto v = invoke({"verify-determinism", "--env", env, "--seed", "42", "--steps", "1000", "--repeats", "3"});
    if (v.code != 0) return {false, env + ": verify-determinism exit " + std::to_string(v.code) + " " + v.out};
    for (const std::string policy : {"random", "zero"}) {
      const auto dump = (dir / (env + "-" + policy + ".jsonl")).string();
      auto r = invoke({"run", "--env", env, "--seed", "42", "--steps", "1000", "--policy", policy, "--dump", dump});
      if (r.code != 0) return {false, env + ": run exit " + std::to_string(r.code)};
      auto p = invoke({"replay", dump});
      if (p.code != 0) return {false, env + ": replay exit " + std::to_string(p.code) + " " + p.out};
    }
  }
  const double wall = seconds_since(t0);
  std::filesystem::remove_all(dir);
  char buf[96];
  std::snprintf(buf, sizeof buf, "3 envs verified and 6 dumps replayed in %.2f s (limit 10 s)", wall);
  return {wall < 10.0, buf};
}

Verdict cross_runtime() {
  std::string detail;
  for (const auto& id : kEnvs) {
    for (const EngineId engine : {EngineId::EulerSemiImplicit, EngineId::RungeKutta4}) {
      const auto config = config_for(id, 42, engine);
      auto sim = runtime::make_env(id, config);
      const auto actions = random_actions(sim->metadata().action_space, 500, 99);
      const auto a = drive(*sim, actions);
      RealTimeRig rig(id, config);
      const auto b = drive(*rig.env, actions);
      if (a != b) {
        std::size_t k = 0;
        while (k < a.size() && a[k] == b[k]) ++k;
        return {false, id + " (" + std::string(physics::to_string(engine)) + ") differs at step " +
                           std::to_string(k)};
      }
    }
  }
  return {true, "3 tasks x 2 engines: 500-step trajectories byte-identical"};
}

double timed_rollout(double rtf) {
  auto config = config_for("cartpole-balance", 5);
  config.rtf = rtf;
  auto env = runtime::make_env("cartpole-balance", config, tasks::TaskOptions{true});
  const auto steps = static_cast<int>(2.0 / to_seconds(config.agent_period));
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
  env->reset();
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < steps; ++i) {
    if (env->episode_done()) env->reset();
    env->step(zero);
  }
  return seconds_since(t0);
}

Verdict accelerated() {
  auto bench = invoke({"benchmark", "--env", "cartpole-balance", "--steps", "10000"});
  if (bench.code != 0) return {false, "benchmark exit " + std::to_string(bench.code)};
  const auto report = nlohmann::json::parse(bench.out.substr(0, bench.out.find('\n')));
  const double rtf0 = report["achieved_rtf"].get<double>();
  const double tps = report["ticks_per_second"].get<double>();
  const bool consistent =
      std::abs(rtf0 - report["sim_seconds"].get<double>() / report["wall_seconds"].get<double>()) <=
      1e-9 * rtf0;

  // Wall-clock windows are sensitive to machine load; up to 3 attempts.
  double w2 = 0, w1 = 0;
  bool ok2 = false, ok1 = false;
  for (int attempt = 0; attempt < 3 && !ok2; ++attempt) {
    w2 = timed_rollout(2.0);
    ok2 = w2 >= 0.95 && w2 <= 1.10;
  }
  for (int attempt = 0; attempt < 3 && !ok1; ++attempt) {
    w1 = timed_rollout(1.0);
    ok1 = w1 >= 1.90 && w1 <= 2.20;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "rtf=0 achieved %.0fx (%.3g ticks/s); 2.0 sim-s at rtf=2 took %.3f s, at rtf=1 %.3f s",
                rtf0, tps, w2, w1);
  return {rtf0 > 1.0 && consistent && ok2 && ok1, buf};
}

Verdict parallel() {
  constexpr std::size_t kN = 4;
  constexpr std::size_t kSteps = 500;
  const std::string id = "cartpole-balance";
  const std::uint64_t master = 2024;
  const auto base = config_for(id, 0);

  // Reference: standalone envs with the matching child seeds, run one
  // after the other with the same auto-reset rule as the vector env.
  std::vector<std::vector<std::string>> reference(kN);
  std::vector<std::vector<Eigen::VectorXd>> actions(kN);
  for (std::size_t i = 0; i < kN; ++i) {
    auto cfg = base;
    cfg.seed = runtime::VectorEnv::instance_seed(master, i);
    auto env = runtime::make_env(id, cfg);
    actions[i] = random_actions(env->metadata().action_space, kSteps, 1000 + i);
    env->reset();
    bool pending_reset = false;
    for (const auto& a : actions[i]) {
      if (pending_reset) {
        env->reset();
        reference[i].push_back("reset");
        pending_reset = false;
        continue;
      }
      env->step(a);
      reference[i].push_back(to_json_line(*env->last_record()));
      pending_reset = env->episode_done();
    }
  }

  std::mt19937_64 scheduler(std::random_device{}());
  for (int run = 0; run < 5; ++run) {
    const std::size_t workers = 2 + scheduler() % 3;
    runtime::VectorEnv venv(id, kN, master, base, workers);
    venv.reset();
    std::vector<std::vector<std::string>> got(kN);
    for (std::size_t k = 0; k < kSteps; ++k) {
      std::vector<Eigen::VectorXd> batch;
      for (std::size_t i = 0; i < kN; ++i) batch.push_back(actions[i][k]);
      // Random stalls before the batch perturb the thread interleaving.
      std::this_thread::sleep_for(std::chrono::microseconds(scheduler() % 50));
      const auto results = venv.step(batch);
      for (std::size_t i = 0; i < kN; ++i) {
        if (results[i].error) return {false, "instance error: " + *results[i].error};
        got[i].push_back(results[i].reset ? "reset" : to_json_line(*venv.instance(i).last_record()));
      }
    }
    if (got != reference) {
      return {false, "run " + std::to_string(run) + " (" + std::to_string(workers) +
                         " workers) differs from the standalone envs"};
    }
  }
  return {true, "n=4 x 500 steps identical to standalone envs over 5 randomized runs"};
}

bool task_suite(EngineId engine, std::string& why) {
  for (const auto& id : kEnvs) {
    const auto config = config_for(id, 7, engine);
    auto env = runtime::make_env(id, config);
    const auto actions = random_actions(env->metadata().action_space, 600, 3);
    const auto a = drive(*env, actions);
    auto again = runtime::make_env(id, config);
    if (drive(*again, actions) != a) {
      why = id + ": not deterministic";
      return false;
    }
    env->reset();
    for (const auto& act : actions) {
      if (env->episode_done()) env->reset();
      const auto r = env->step(act);
      if (!env->metadata().observation_space.contains(r.observation) || !std::isfinite(r.reward)) {
        why = id + ": observation outside its space or non-finite reward";
        return false;
      }
    }
    RealTimeRig rig(id, config);
    if (drive(*rig.env, actions) != a) {
      why = id + ": real-time runtime disagrees";
      return false;
    }
  }
  auto balance = runtime::make_env("cartpole-balance", config_for("cartpole-balance", 1, engine),
                                   tasks::TaskOptions{true});
  balance->reset();
  double total = 0;
  while (!balance->episode_done()) total += balance->step(Eigen::VectorXd::Zero(1)).reward;
  if (total != 500.0) {
    why = "upright cart-pole earned " + std::to_string(total) + " instead of 500";
    return false;
  }
  return true;
}

Verdict engines() {
  std::string why;
  for (const EngineId engine : {EngineId::EulerSemiImplicit, EngineId::RungeKutta4}) {
    if (!task_suite(engine, why)) return {false, std::string(physics::to_string(engine)) + ": " + why};
  }
  auto dyn = runtime::load_dynamics("pendulum-swingup");
  physics::PhysicsState s0;
  s0.q = Eigen::VectorXd::Constant(1, 0.5);
  s0.qd = Eigen::VectorXd::Zero(1);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
  const Duration dt = std::chrono::microseconds(100);
  physics::World euler(EngineId::EulerSemiImplicit, dyn), rk4(EngineId::RungeKutta4, dyn);
  euler.set_state(s0);
  rk4.set_state(s0);
  for (int i = 0; i < 10000; ++i) {
    euler.step(zero, dt);
    rk4.step(zero, dt);
  }
  const double gap = std::max(std::abs(euler.state().q[0] - rk4.state().q[0]),
                              std::abs(euler.state().qd[0] - rk4.state().qd[0]));
  char buf[160];
  std::snprintf(buf, sizeof buf, "task suite passes under euler-si and rk4; 1 s pendulum gap %.3g (< 1e-3)", gap);
  return {gap < 1e-3, buf};
}

Verdict physics_correctness() {
  const physics::Pendulum<double> pend{1.0, 1.0};
  using V = Eigen::VectorXd;
  const V zero = V::Zero(1);

  V q = V::Constant(1, 0.5), qd = V::Zero(1);
  const double e0 = pend.energy(q, qd);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    physics::semi_implicit_euler_step(pend, q, qd, zero, 1e-3);
    worst = std::max(worst, std::abs(pend.energy(q, qd) - e0) / e0);
  }

  // Error of the 1 s terminal state (max over q and qd) against an RK4
  // reference at dt = 1e-5, halving dt from 1e-2.
  auto terminal = [&](bool rk, double h) {
    V tq = V::Constant(1, 0.5), tqd = V::Zero(1);
    const int n = static_cast<int>(std::lround(1.0 / h));
    for (int i = 0; i < n; ++i) {
      if (rk) physics::rk4_step(pend, tq, tqd, zero, h);
      else physics::semi_implicit_euler_step(pend, tq, tqd, zero, h);
    }
    return Eigen::Vector2d(tq[0], tqd[0]);
  };
  const Eigen::Vector2d ref = terminal(true, 1e-5);
  auto error = [&](bool rk, double h) { return (terminal(rk, h) - ref).cwiseAbs().maxCoeff(); };
  bool euler_ok = true, rk_ok = true;
  std::string ratios;
  double h = 1e-2;
  double e_prev = error(false, h), r_prev = error(true, h);
  for (int k = 0; k < 3; ++k) {
    h /= 2;
    const double e = error(false, h), r = error(true, h);
    const double er = e_prev / e, rr = r_prev / r;
    euler_ok = euler_ok && er >= 1.8 && er <= 2.2;
    rk_ok = rk_ok && rr >= 12.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.2f/%.1f", er, rr);
    ratios += buf;
    e_prev = e;
    r_prev = r;
  }

  const physics::CartPole<double> cp{1.0, 0.1, 0.5};
  const V acc = cp.acceleration(V::Zero(2), V::Zero(2), V::Constant(1, 10.0));
  const Eigen::Vector2d lag = cartpole_lagrangian(1.0, 0.1, 0.5, physics::kGravity, 0.0, 0.0, 10.0);
  const bool spot = std::abs(acc[1] - (-14.634)) <= 1e-3 * 14.634 &&
                    std::abs(acc[0] - 9.756) <= 1e-3 * 9.756 &&
                    std::abs(acc[1] - lag[1]) <= 1e-9 * 14.634 && std::abs(acc[0] - lag[0]) <= 1e-9 * 9.756;

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "energy drift %.3f%% (<= 2%%); euler/rk4 ratios%s; cart-pole theta_dd %.4f x_dd %.4f",
                worst * 100, ratios.c_str(), acc[1], acc[0]);
  return {worst <= 0.02 && euler_ok && rk_ok && spot, buf};
}

Verdict parser() {
  const std::string fixture = read_file(std::string(REPROGYM_MODEL_DIR) + "/cartpole.sdf");
  const auto parsed = model::parse_sdf(fixture);
  if (!parsed.ok() || !parsed.diagnostics.empty()) {
    return {false, "cartpole.sdf produced " + std::to_string(parsed.diagnostics.size()) + " diagnostics"};
  }
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_model(rng);
    const auto back = model::parse_sdf(model::serialize_sdf(m));
    if (!back.ok() || !(*back.model == m)) return {false, "round trip failed for generated model " + std::to_string(i)};
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto corpus = fuzz_corpus(fixture, 5);
  std::size_t rejected = 0;
  for (const auto& input : corpus) {
    if (!model::parse_sdf(input).ok()) ++rejected;
  }
  const double wall = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "fixture clean; 200 round trips; %zu fuzz inputs (%zu rejected) in %.2f s without crash",
                corpus.size(), rejected, wall);
  return {wall < 60.0, buf};
}

Verdict robot_agnostic() {
  using robot::MockRobot;
  std::int64_t steps = 0;
  std::string detail;

  auto balance = tasks::make_task("cartpole-balance");
  MockRobot cart({tasks::kCartJoint, tasks::kPoleJoint}, ramp_script(2, 1, 0.0, 0.01, 100));
  const auto b = mock_episode(*balance, cart, 1000, steps);
  // theta crosses 12 degrees on the 22nd frame.
  if (!b.done || b.reason != "theta_limit" || steps != 21 || cart.command_count() != 21) {
    return {false, "cartpole-balance: " + b.reason + " after " + std::to_string(steps)};
  }
  detail += "balance " + b.reason + "@" + std::to_string(steps);

  auto swing = tasks::make_task("cartpole-swingup");
  MockRobot cart2({tasks::kCartJoint, tasks::kPoleJoint}, ramp_script(2, 0, 0.0, 0.1, 100, {0.0, 3.1}));
  const auto s = mock_episode(*swing, cart2, 1000, steps);
  if (!s.done || s.reason != "x_limit" || steps != 24) {
    return {false, "cartpole-swingup: " + s.reason + " after " + std::to_string(steps)};
  }
  detail += ", swingup " + s.reason + "@" + std::to_string(steps);

  auto pend = tasks::make_task("pendulum-swingup");
  MockRobot hinge({tasks::kHingeJoint}, ramp_script(1, 0, 0.0, 0.02, 300));
  const auto p = mock_episode(*pend, hinge, 1000, steps);
  if (!p.done || p.reason != "max_steps" || steps != 200) {
    return {false, "pendulum-swingup: " + p.reason + " after " + std::to_string(steps)};
  }
  detail += ", pendulum " + p.reason + "@" + std::to_string(steps);
  return {true, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"reproducibility", reproducibility},
      {"cross-runtime invariance", cross_runtime},
      {"accelerated simulation", accelerated},
      {"parallel simulation", parallel},
      {"multiple physics engines", engines},
      {"physics correctness", physics_correctness},
      {"model parser", parser},
      {"robot-agnostic tasks", robot_agnostic},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
