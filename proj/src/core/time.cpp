#include "reprogym/core/time.hpp"

#include <cmath>

#include "reprogym/core/error.hpp"

namespace reprogym {

double to_seconds(Duration d) noexcept {
  return static_cast<double>(d.count()) / 1e9;
}

Duration duration_from_seconds(double seconds) {
  if (!std::isfinite(seconds) || seconds < 0.0 || seconds > 9.0e9) {
    throw ValidationError("duration must be finite and non-negative, got " +
                          std::to_string(seconds));
  }
  const double ns = seconds * 1e9;
  const double whole = std::round(ns);
  if (std::abs(ns - whole) > 1e-6 * std::max(1.0, whole * 1e-9)) {
    throw ValidationError("duration " + std::to_string(seconds) +
                          " s is not a whole number of nanoseconds");
  }
  return Duration{static_cast<std::int64_t>(whole)};
}

}  // namespace reprogym
