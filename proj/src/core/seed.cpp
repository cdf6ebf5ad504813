#include "reprogym/core/seed.hpp"

namespace reprogym {

// Distinct framework labels must map to distinct children for any master.
// splitmix64 is a bijection, so this reduces to distinct label hashes.
static_assert(label_hash("init") != label_hash("task"));
static_assert(label_hash("action-space") != label_hash("observation-space"));
static_assert(label_hash("policy") != label_hash("init"));
static_assert(SeedTree(5).child("init") == SeedTree(5).child("init"));

}  // namespace reprogym
