#pragma once

// Seeded random instances for property harnesses.

#include <random>
#include <utility>

#include "tinter/core.hpp"

namespace tinter {

using Rng = std::mt19937_64;

/// Uniform random member of the block with the given profile.
Subset random_block_member(const PartitionedGroundSet& ground, const Profile& profile, Rng& rng);

/// Uniform random subset of the ground set (each element with probability 1/2).
Subset random_subset(const PartitionedGroundSet& ground, Rng& rng);

/// Random t-intersecting family: members of `profile` through a random
/// t-subset center, plus random extra members kept only when they preserve
/// t-intersection. The center respects the profile (|T ∩ X_i| <= r_i).
Family random_t_intersecting(const PartitionedGroundSet& ground, const Profile& profile, int t, std::size_t target,
                             Rng& rng);

/// Random cross t-intersecting pair with member profiles ra and rb. Needs
/// t <= Σ_i min(ra_i, rb_i).
std::pair<Family, Family> random_cross_t_intersecting(const PartitionedGroundSet& ground, const Profile& ra,
                                                      const Profile& rb, int t, std::size_t target, Rng& rng);

}  // namespace tinter
