#pragma once

#include <cstdint>
#include <string_view>

namespace reprogym {

/// splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// 64-bit FNV-1a over the label bytes.
constexpr std::uint64_t label_hash(std::string_view label) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Stateless derivation of per-component seeds from one master seed.
class SeedTree {
 public:
  constexpr explicit SeedTree(std::uint64_t master) noexcept : master_(master) {}

  constexpr std::uint64_t master() const noexcept { return master_; }

  constexpr std::uint64_t child(std::string_view label) const noexcept {
    return splitmix64(master_ ^ label_hash(label));
  }

 private:
  std::uint64_t master_;
};

namespace seed_labels {
inline constexpr std::string_view kInit = "init";
inline constexpr std::string_view kTask = "task";
inline constexpr std::string_view kActionSpace = "action-space";
inline constexpr std::string_view kObservationSpace = "observation-space";
inline constexpr std::string_view kPolicy = "policy";
}  // namespace seed_labels

}  // namespace reprogym
