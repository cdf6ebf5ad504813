#pragma once

#include <chrono>
#include <cstdint>

namespace reprogym {

/// Simulated and wall durations are integer nanoseconds so that
/// k ticks of dt is exactly k * dt.
using Duration = std::chrono::nanoseconds;

double to_seconds(Duration d) noexcept;

/// Converts seconds to a Duration. Throws ValidationError unless the value
/// is finite, non-negative and a whole number of nanoseconds (within 1e-6 ns).
Duration duration_from_seconds(double seconds);

}  // namespace reprogym
