#include "reprogym/runtime/vector_env.hpp"

#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>

#include "reprogym/core/seed.hpp"
#include "reprogym/runtime/registry.hpp"

namespace reprogym::runtime {

/// Fixed set of threads executing index-parallel jobs. run() blocks until
/// every index is processed; each index is handled by exactly one worker.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t threads) {
    for (std::size_t i = 0; i < threads; ++i) {
      threads_.emplace_back([this](std::stop_token st) { loop(st); });
    }
  }

  ~WorkerPool() {
    {
      std::lock_guard lock(mutex_);
      for (auto& t : threads_) t.request_stop();
    }
    wake_.notify_all();
  }

  std::size_t size() const noexcept { return threads_.size(); }

  void run(std::size_t count, const std::function<void(std::size_t)>& job) {
    if (threads_.empty() || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) job(i);
      return;
    }
    std::unique_lock lock(mutex_);
    job_ = &job;
    count_ = count;
    next_.store(0);
    remaining_ = count;
    ++generation_;
    wake_.notify_all();
    done_.wait(lock, [this] { return remaining_ == 0 && active_ == 0; });
    job_ = nullptr;
  }

 private:
  void loop(std::stop_token st) {
    std::uint64_t seen = 0;
    while (true) {
      const std::function<void(std::size_t)>* job;
      std::size_t count;
      {
        std::unique_lock lock(mutex_);
        wake_.wait(lock, [&] { return st.stop_requested() || generation_ != seen; });
        if (st.stop_requested()) return;
        seen = generation_;
        job = job_;
        count = count_;
        if (job == nullptr) continue;
        ++active_;
      }
      std::size_t finished = 0;
      for (std::size_t i = next_.fetch_add(1); i < count; i = next_.fetch_add(1)) {
        (*job)(i);
        ++finished;
      }
      std::lock_guard lock(mutex_);
      remaining_ -= finished;
      --active_;
      if (remaining_ == 0 && active_ == 0) done_.notify_one();
    }
  }

  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t count_ = 0;
  std::atomic<std::size_t> next_{0};
  std::size_t remaining_ = 0;
  std::size_t active_ = 0;
  std::uint64_t generation_ = 0;
  std::vector<std::jthread> threads_;
};

VectorEnv::VectorEnv(const std::string& env_id, std::size_t n, std::uint64_t master_seed,
                     RuntimeConfig base, std::size_t workers, tasks::TaskOptions options) {
  if (n == 0) throw ValidationError("vector env needs at least one instance");
  for (std::size_t i = 0; i < n; ++i) {
    RuntimeConfig cfg = base;
    cfg.seed = instance_seed(master_seed, i);
    envs_.push_back(make_env(env_id, cfg, options));
  }
  needs_reset_.assign(n, true);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  pool_ = std::make_unique<WorkerPool>(workers > 1 ? std::min(workers, n) : 0);
}

VectorEnv::~VectorEnv() = default;

std::size_t VectorEnv::workers() const noexcept { return std::max<std::size_t>(1, pool_->size()); }

std::uint64_t VectorEnv::instance_seed(std::uint64_t master, std::size_t index) {
  return SeedTree(master).child("env-" + std::to_string(index));
}

std::vector<Eigen::VectorXd> VectorEnv::reset() {
  std::vector<Eigen::VectorXd> obs(envs_.size());
  pool_->run(envs_.size(), [&](std::size_t i) { obs[i] = envs_[i]->reset(); });
  needs_reset_.assign(envs_.size(), false);
  return obs;
}

std::vector<VectorStepResult> VectorEnv::step(const std::vector<Eigen::VectorXd>& actions) {
  if (actions.size() != envs_.size()) {
    throw ValidationError("vector step got " + std::to_string(actions.size()) + " actions for " +
                          std::to_string(envs_.size()) + " instances");
  }
  std::vector<VectorStepResult> results(envs_.size());
  pool_->run(envs_.size(), [&](std::size_t i) {
    auto& out = results[i];
    try {
      if (needs_reset_[i]) {
        out.observation = envs_[i]->reset();
        out.reset = true;
        needs_reset_[i] = false;
        return;
      }
      auto r = envs_[i]->step(actions[i]);
      out.observation = std::move(r.observation);
      out.reward = r.reward;
      out.done = r.done;
      out.info = std::move(r.info);
      needs_reset_[i] = r.done;
    } catch (const std::exception& e) {
      out.error = e.what();
      needs_reset_[i] = true;
    }
  });
  return results;
}

}  // namespace reprogym::runtime
