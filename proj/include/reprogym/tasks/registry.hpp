#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "reprogym/tasks/task.hpp"

namespace reprogym::tasks {

/// Registered ids: cartpole-balance, cartpole-swingup, pendulum-swingup.
std::vector<std::string> task_ids();

/// Throws LookupError listing the registered ids for an unknown id.
std::unique_ptr<Task> make_task(std::string_view id, const TaskOptions& options = {});

}  // namespace reprogym::tasks
