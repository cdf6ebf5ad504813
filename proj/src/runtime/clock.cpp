#include "reprogym/runtime/clock.hpp"

#include <thread>

namespace reprogym::runtime {

Duration SteadyClock::now() {
  return std::chrono::duration_cast<Duration>(std::chrono::steady_clock::now() - start_);
}

void SteadyClock::sleep_until(Duration t) {
  std::this_thread::sleep_until(start_ + t);
}

Duration MockClock::now() {
  now_ += pending_;
  pending_ = Duration::zero();
  return now_;
}

void MockClock::sleep_until(Duration t) {
  if (t > now_) now_ = t;
}

}  // namespace reprogym::runtime
