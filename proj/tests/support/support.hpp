// Helpers shared by the unit and acceptance test binaries.
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reprogym/cli/commands.hpp"
#include "reprogym/core/rng.hpp"
#include "reprogym/core/seed.hpp"
#include "reprogym/core/trajectory.hpp"
#include "reprogym/model/robot_model.hpp"
#include "reprogym/robot/mock_robot.hpp"
#include "reprogym/robot/simulated_robot.hpp"
#include "reprogym/runtime/clock.hpp"
#include "reprogym/runtime/realtime_runtime.hpp"
#include "reprogym/runtime/registry.hpp"
#include "reprogym/tasks/cartpole_balance.hpp"
#include "reprogym/tasks/pendulum_swingup.hpp"
#include "reprogym/tasks/registry.hpp"

namespace reprogym::testing {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "reprogym-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
}

/// Random actions from the action space, drawn from `seed`.
inline std::vector<Eigen::VectorXd> random_actions(const Space& space, std::size_t n,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(space.sample(rng));
  return out;
}

/// Applies `actions` in order, resetting after every finished episode, and
/// returns the dump lines of the records.
inline std::vector<std::string> drive(runtime::TaskRuntime& env,
                                      const std::vector<Eigen::VectorXd>& actions) {
  std::vector<std::string> lines;
  env.reset();
  for (const auto& a : actions) {
    if (env.episode_done()) env.reset();
    env.step(a);
    lines.push_back(to_json_line(*env.last_record()));
  }
  return lines;
}

/// Simulated robot, mock clock and real-time runtime wired the way a
/// hardware deployment would be, but deterministic.
struct RealTimeRig {
  std::shared_ptr<const physics::DynamicsModel> dyn;
  robot::SimulatedRobot robot;
  runtime::MockClock clock;
  std::unique_ptr<runtime::RealTimeRuntime> env;

  RealTimeRig(const std::string& id, runtime::RuntimeConfig config,
              tasks::TaskOptions options = {}, Duration clock_start = std::chrono::seconds(7))
      : dyn(runtime::load_dynamics(id)),
        robot(dyn, config.engine, config.physics_dt),
        clock(clock_start) {
    env = std::make_unique<runtime::RealTimeRuntime>(
        id, tasks::make_task(id, options), robot, clock, config,
        [this](const std::vector<tasks::JointInit>& init) {
          robot.reset_state(runtime::initial_physics_state(robot.joint_names(), init), clock.now());
        });
  }
};

inline runtime::RuntimeConfig config_for(const std::string& id, std::uint64_t seed,
                                         physics::EngineId engine = physics::EngineId::EulerSemiImplicit) {
  auto c = runtime::default_config(id);
  c.seed = seed;
  c.engine = engine;
  return c;
}

/// Generalized accelerations of the cart-pole obtained by solving the
/// Lagrangian equations M(q) qdd = b(q, qd, F) directly, as an independent
/// check of the closed form.
inline Eigen::Vector2d cartpole_lagrangian(double cart_mass, double pole_mass, double l, double g,
                                           double theta, double theta_dot, double force) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2d m;
  m << cart_mass + pole_mass, pole_mass * l * c,
       pole_mass * l * c, 4.0 / 3.0 * pole_mass * l * l;
  const Eigen::Vector2d b(force + pole_mass * l * s * theta_dot * theta_dot, pole_mass * g * l * s);
  return m.partialPivLu().solve(b);
}

/// Random valid robot model: a tree of 1..8 links in shuffled declaration
/// order with random joint kinds, axes and limit subsets.
inline model::RobotModel random_model(Rng& rng) {
  using model::JointKind;
  model::RobotModel m;
  m.name = "gen" + std::to_string(rng.below(100000));
  const std::size_t n = 1 + rng.below(8);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("l" + std::to_string(i) + "_" + std::to_string(rng.below(1000)));
  for (std::size_t i = 0; i < n; ++i) {
    model::Link link;
    link.name = names[i];
    link.mass = rng.uniform(0.01, 50.0);
    link.inertia_diag = Eigen::Vector3d(rng.uniform(1e-6, 2.0), rng.uniform(1e-6, 2.0), rng.uniform(1e-6, 2.0));
    if (rng.below(2) == 1) link.com_offset = rng.uniform(-1.0, 1.0);
    m.links.push_back(link);
  }
  m.base_link = names[0];
  m.fixed_base = rng.below(2) == 1;
  for (std::size_t i = 1; i < n; ++i) {
    model::Joint j;
    j.name = "j" + std::to_string(i);
    j.parent = names[rng.below(i)];
    j.child = names[i];
    const auto kind = rng.below(3);
    j.kind = kind == 0 ? JointKind::Revolute : kind == 1 ? JointKind::Prismatic : JointKind::Fixed;
    if (j.kind != JointKind::Fixed) {
      Eigen::Vector3d axis(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      if (axis.norm() < 1e-3) axis = Eigen::Vector3d::UnitZ();
      j.axis = axis.normalized();
      if (rng.below(2) == 1) {
        j.limits.lower = rng.uniform(-3.0, 0.0);
        j.limits.upper = rng.uniform(0.0, 3.0);
      }
      if (rng.below(2) == 1) j.limits.effort = rng.uniform(0.1, 500.0);
      if (rng.below(2) == 1) j.limits.velocity = rng.uniform(0.1, 50.0);
    }
    m.joints.push_back(j);
  }
  // Declaration order is irrelevant to the model's meaning; shuffle it.
  for (std::size_t i = m.links.size(); i > 1; --i) std::swap(m.links[i - 1], m.links[rng.below(i)]);
  for (std::size_t i = m.joints.size(); i > 1; --i) std::swap(m.joints[i - 1], m.joints[rng.below(i)]);
  return m;
}

/// Adversarial parser inputs, none larger than 1 MiB: truncations and byte
/// mutations of `seed_text`, deep nesting, huge attributes, bad entities.
inline std::vector<std::string> fuzz_corpus(const std::string& seed_text, std::uint64_t seed,
                                            std::size_t mutations = 400) {
  constexpr std::size_t kMaxBytes = 1 << 20;
  Rng rng(seed);
  std::vector<std::string> corpus;
  corpus.push_back("");
  corpus.push_back("<");
  corpus.push_back("<sdf>");
  corpus.push_back("<?xml version=\"1.0\"?>");
  corpus.push_back("<sdf><model name=\"m\"><link name=\"a\"><inertial><mass>&#xFFFFFFFF;</mass></inertial></link></model></sdf>");
  corpus.push_back("<sdf><model name='&unknown;'/></sdf>");
  corpus.push_back("<!DOCTYPE sdf [<!ENTITY a \"&a;&a;\">]><sdf>&a;</sdf>");
  corpus.push_back("<sdf><model name=\"m\" name=\"n\"/></sdf>");
  corpus.push_back("<sdf><![CDATA[ unterminated");
  corpus.push_back("<sdf><!-- unterminated comment");
  corpus.push_back(std::string("<sdf>\0</sdf>", 12));
  {
    std::string deep;
    while (deep.size() + 16 < kMaxBytes / 2) deep += "<a>";
    corpus.push_back(deep);
    std::string closed = "<sdf>";
    for (int i = 0; i < 100000; ++i) closed += "<x>";
    for (int i = 0; i < 100000; ++i) closed += "</x>";
    closed += "</sdf>";
    if (closed.size() <= kMaxBytes) corpus.push_back(closed);
  }
  corpus.push_back("<sdf><model name=\"" + std::string(kMaxBytes - 64, 'n') + "\"/></sdf>");
  {
    std::string many = "<sdf><model name=\"m\">";
    while (many.size() + 64 < kMaxBytes) many += "<link name=\"x\"/>";
    corpus.push_back(many + "</model></sdf>");
  }
  for (std::size_t i = 0; i < mutations; ++i) {
    std::string s = seed_text;
    switch (rng.below(4)) {
      case 0:
        s.resize(rng.below(s.size() + 1));
        break;
      case 1:
        for (std::size_t k = 0, n = 1 + rng.below(8); k < n && !s.empty(); ++k) {
          s[rng.below(s.size())] = static_cast<char>(rng.below(256));
        }
        break;
      case 2: {
        const std::size_t a = rng.below(s.size() + 1), b = rng.below(s.size() + 1);
        const auto lo = std::min(a, b), hi = std::max(a, b);
        s.erase(lo, hi - lo);
        break;
      }
      default: {
        const std::size_t a = rng.below(s.size() + 1), len = rng.below(200);
        const std::string chunk = s.substr(rng.below(s.size() + 1), len);
        s.insert(a, chunk);
        break;
      }
    }
    if (s.size() <= kMaxBytes) corpus.push_back(std::move(s));
  }
  return corpus;
}

/// Task-level episode against a scripted MockRobot. Returns the outcome of
/// the last step; `steps` receives the episode length.
inline tasks::Outcome mock_episode(tasks::Task& task, robot::MockRobot& mock, std::int64_t max_steps,
                                   std::int64_t& steps) {
  task.attach(mock);
  task.on_reset();
  Eigen::VectorXd action = Eigen::VectorXd::Constant(task.action_space().dim(), 0.5);
  tasks::Outcome out;
  for (steps = 0; steps < max_steps;) {
    task.set_action(action);
    mock.advance();
    (void)task.observation();
    out = task.reward_and_done();
    ++steps;
    if (out.done) break;
  }
  return out;
}

/// Frames moving joint `moving` linearly by `rate` per frame from `start`.
inline std::vector<robot::MockFrame> ramp_script(std::size_t joints, std::size_t moving, double start,
                                                 double rate, std::size_t frames,
                                                 std::vector<double> base = {}) {
  if (base.empty()) base.assign(joints, 0.0);
  std::vector<robot::MockFrame> script;
  for (std::size_t f = 0; f < frames; ++f) {
    robot::MockFrame frame{base, std::vector<double>(joints, 0.0)};
    frame.positions[moving] = start + rate * static_cast<double>(f);
    frame.velocities[moving] = rate;
    script.push_back(frame);
  }
  return script;
}

}  // namespace reprogym::testing
