#include "reprogym/physics/engine.hpp"

#include <sstream>

#include "reprogym/physics/integrators.hpp"

namespace reprogym::physics {

std::string_view to_string(EngineId id) noexcept {
  return id == EngineId::EulerSemiImplicit ? "euler-si" : "rk4";
}

std::optional<EngineId> engine_from_string(std::string_view name) noexcept {
  if (name == "euler-si") return EngineId::EulerSemiImplicit;
  if (name == "rk4") return EngineId::RungeKutta4;
  return std::nullopt;
}

namespace {

void check_inputs(const DynamicsModel& dyn, const PhysicsState& state, const Eigen::VectorXd& force,
                  Duration dt) {
  if (dt <= Duration::zero()) throw ValidationError("physics step needs dt > 0");
  if (force.size() != dyn.dof()) {
    throw ValidationError("force has " + std::to_string(force.size()) + " entries, model has " +
                          std::to_string(dyn.dof()) + " dof");
  }
  if (state.q.size() != dyn.dof() || state.qd.size() != dyn.dof()) {
    throw ValidationError("state dimension does not match the model dof");
  }
  if (!state.all_finite() || !force.allFinite()) {
    throw ValidationError("physics step input is not finite");
  }
}

std::string describe(const PhysicsState& s) {
  std::ostringstream out;
  out << "q = [" << s.q.transpose() << "], qd = [" << s.qd.transpose() << "] at t = "
      << to_seconds(s.sim_time) << " s";
  return out.str();
}

template <typename Integrate>
class IntegratorEngine final : public PhysicsEngine {
 public:
  explicit IntegratorEngine(EngineId id) : id_(id) {}

  EngineId id() const noexcept override { return id_; }

  PhysicsState step(const DynamicsModel& dyn, const PhysicsState& state,
                    const Eigen::VectorXd& force, Duration dt) const override {
    check_inputs(dyn, state, force, dt);
    PhysicsState next = state;
    const double h = to_seconds(dt);
    std::visit([&](const auto& a) { Integrate{}(a, next.q, next.qd, force, h); }, dyn.archetype());
    next.sim_time += dt;
    if (!next.all_finite()) {
      throw DivergenceError(std::string(to_string(id_)) + " diverged: " + describe(next), next);
    }
    return next;
  }

 private:
  EngineId id_;
};

struct EulerSi {
  template <typename Dyn>
  void operator()(const Dyn& d, Eigen::VectorXd& q, Eigen::VectorXd& qd, const Eigen::VectorXd& f,
                  double h) const {
    semi_implicit_euler_step(d, q, qd, f, h);
  }
};

struct Rk4 {
  template <typename Dyn>
  void operator()(const Dyn& d, Eigen::VectorXd& q, Eigen::VectorXd& qd, const Eigen::VectorXd& f,
                  double h) const {
    rk4_step(d, q, qd, f, h);
  }
};

const IntegratorEngine<EulerSi> kEuler{EngineId::EulerSemiImplicit};
const IntegratorEngine<Rk4> kRk4{EngineId::RungeKutta4};

}  // namespace

const PhysicsEngine& engine(EngineId id) noexcept {
  if (id == EngineId::EulerSemiImplicit) return kEuler;
  return kRk4;
}

World::World(EngineId id, std::shared_ptr<const DynamicsModel> dyn)
    : dyn_(std::move(dyn)), engine_(&engine(id)) {
  state_.q = Eigen::VectorXd::Zero(dyn_->dof());
  state_.qd = Eigen::VectorXd::Zero(dyn_->dof());
}

void World::set_state(const PhysicsState& state) {
  if (state.q.size() != dyn_->dof() || state.qd.size() != dyn_->dof()) {
    throw ValidationError("state has " + std::to_string(state.q.size()) + "/" +
                          std::to_string(state.qd.size()) + " entries, model has " +
                          std::to_string(dyn_->dof()) + " dof");
  }
  if (!state.all_finite()) throw ValidationError("state contains non-finite values");
  state_ = state;
}

void World::step(const Eigen::VectorXd& force, Duration dt) {
  state_ = engine_->step(*dyn_, state_, force, dt);
}

}  // namespace reprogym::physics
