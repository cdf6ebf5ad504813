#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "reprogym/core/rng.hpp"

namespace reprogym {

/// Action/observation domain: a box with per-dimension bounds, or a
/// discrete set {0, ..., n-1} represented as a 1-vector.
class Space {
 public:
  enum class Kind { Box, Discrete };

  /// Throws ValidationError unless sizes match and low <= high elementwise.
  static Space box(Eigen::VectorXd low, Eigen::VectorXd high);
  /// Throws ValidationError unless n >= 1.
  static Space discrete(std::int64_t n);

  Kind kind() const noexcept { return kind_; }
  Eigen::Index dim() const noexcept;
  const Eigen::VectorXd& low() const noexcept { return low_; }
  const Eigen::VectorXd& high() const noexcept { return high_; }
  std::int64_t n() const noexcept { return n_; }

  /// False (not an error) for samples of the wrong dimension or NaNs.
  bool contains(const Eigen::VectorXd& sample) const noexcept;

  /// Uniform draw. Box sampling requires finite bounds.
  Eigen::VectorXd sample(Rng& rng) const;

  friend bool operator==(const Space& a, const Space& b) noexcept;

 private:
  Space() = default;

  Kind kind_ = Kind::Box;
  Eigen::VectorXd low_;
  Eigen::VectorXd high_;
  std::int64_t n_ = 0;
};

}  // namespace reprogym
