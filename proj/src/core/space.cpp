#include "reprogym/core/space.hpp"

#include <cmath>
#include <string>

#include "reprogym/core/error.hpp"

namespace reprogym {

Space Space::box(Eigen::VectorXd low, Eigen::VectorXd high) {
  if (low.size() != high.size()) {
    throw ValidationError("box bounds differ in length: " + std::to_string(low.size()) +
                          " vs " + std::to_string(high.size()));
  }
  for (Eigen::Index i = 0; i < low.size(); ++i) {
    if (std::isnan(low[i]) || std::isnan(high[i]) || !(low[i] <= high[i])) {
      throw ValidationError("box bound " + std::to_string(i) + " has low > high");
    }
  }
  Space s;
  s.kind_ = Kind::Box;
  s.low_ = std::move(low);
  s.high_ = std::move(high);
  return s;
}

Space Space::discrete(std::int64_t n) {
  if (n < 1) throw ValidationError("discrete space needs n >= 1, got " + std::to_string(n));
  Space s;
  s.kind_ = Kind::Discrete;
  s.n_ = n;
  return s;
}

Eigen::Index Space::dim() const noexcept {
  return kind_ == Kind::Box ? low_.size() : 1;
}

bool Space::contains(const Eigen::VectorXd& sample) const noexcept {
  if (sample.size() != dim()) return false;
  if (kind_ == Kind::Discrete) {
    const double v = sample[0];
    return v >= 0.0 && v < static_cast<double>(n_) && std::floor(v) == v;
  }
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    if (!(low_[i] <= sample[i] && sample[i] <= high_[i])) return false;
  }
  return true;
}

Eigen::VectorXd Space::sample(Rng& rng) const {
  if (kind_ == Kind::Discrete) {
    Eigen::VectorXd out(1);
    out[0] = static_cast<double>(rng.below(static_cast<std::uint64_t>(n_)));
    return out;
  }
  Eigen::VectorXd out(low_.size());
  for (Eigen::Index i = 0; i < low_.size(); ++i) {
    if (!std::isfinite(low_[i]) || !std::isfinite(high_[i])) {
      throw ValidationError("cannot sample an unbounded box dimension");
    }
    // Clamp guards the last-ulp overshoot of low + (high - low) * u.
    out[i] = std::min(rng.uniform(low_[i], high_[i]), high_[i]);
  }
  return out;
}

bool operator==(const Space& a, const Space& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Space::Kind::Discrete) return a.n_ == b.n_;
  return a.low_.size() == b.low_.size() && a.low_ == b.low_ && a.high_ == b.high_;
}

}  // namespace reprogym
