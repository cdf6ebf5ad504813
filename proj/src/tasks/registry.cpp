#include "reprogym/tasks/registry.hpp"

#include <functional>

#include "reprogym/tasks/cartpole_balance.hpp"
#include "reprogym/tasks/cartpole_swingup.hpp"
#include "reprogym/tasks/pendulum_swingup.hpp"

namespace reprogym::tasks {
namespace {

struct Entry {
  std::string_view id;
  std::unique_ptr<Task> (*make)(const TaskOptions&);
};

constexpr Entry kTasks[] = {
    {"cartpole-balance", [](const TaskOptions& o) -> std::unique_ptr<Task> {
       return std::make_unique<CartPoleBalance>(o);
     }},
    {"cartpole-swingup", [](const TaskOptions& o) -> std::unique_ptr<Task> {
       return std::make_unique<CartPoleSwingUp>(o);
     }},
    {"pendulum-swingup", [](const TaskOptions& o) -> std::unique_ptr<Task> {
       return std::make_unique<PendulumSwingUp>(o);
     }},
};

}  // namespace

std::vector<std::string> task_ids() {
  std::vector<std::string> ids;
  for (const auto& e : kTasks) ids.emplace_back(e.id);
  return ids;
}

std::unique_ptr<Task> make_task(std::string_view id, const TaskOptions& options) {
  for (const auto& e : kTasks) {
    if (e.id == id) return e.make(options);
  }
  std::string known;
  for (const auto& e : kTasks) known += (known.empty() ? "" : ", ") + std::string(e.id);
  throw LookupError("unknown task '" + std::string(id) + "'; registered: " + known);
}

}  // namespace reprogym::tasks
