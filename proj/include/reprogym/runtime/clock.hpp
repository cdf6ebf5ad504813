#pragma once

#include <chrono>

#include "reprogym/core/time.hpp"

namespace reprogym::runtime {

/// Monotonic time source for the real-time runtime. now() must never
/// decrease.
class ClockSource {
 public:
  virtual ~ClockSource() = default;

  virtual Duration now() = 0;
  /// Returns once now() >= t (immediately if already past).
  virtual void sleep_until(Duration t) = 0;
};

/// std::chrono::steady_clock, zeroed at construction.
class SteadyClock final : public ClockSource {
 public:
  SteadyClock() : start_(std::chrono::steady_clock::now()) {}

  Duration now() override;
  void sleep_until(Duration t) override;

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Manually driven clock. sleep_until() jumps straight to the target.
class MockClock final : public ClockSource {
 public:
  explicit MockClock(Duration start = Duration::zero()) : now_(start) {}

  Duration now() override;
  void sleep_until(Duration t) override;

  void advance(Duration d) noexcept { now_ += d; }
  /// Adds `d` just before the next now() returns, simulating work that
  /// takes that long.
  void schedule_jump(Duration d) noexcept { pending_ += d; }
  /// Sets the time unconditionally (may go backwards, for fault injection).
  void set(Duration t) noexcept { now_ = t; }

 private:
  Duration now_;
  Duration pending_{0};
};

}  // namespace reprogym::runtime
