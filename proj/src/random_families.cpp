#include "tinter/random_families.hpp"

#include <algorithm>
#include <numeric>

namespace tinter {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random center of size t with |T ∩ X_i| <= cap_i.
Subset random_center(const PartitionedGroundSet& ground, const std::vector<int>& cap, int t, Rng& rng) {
  std::vector<int> pool;
  for (int i = 0; i < ground.parts(); ++i)
    for (int e = ground.first(i); e <= ground.last(i); ++e) pool.push_back(e);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> used(static_cast<std::size_t>(ground.parts()), 0);
  Subset c;
  for (int e : pool) {
    if (c.size() == t) break;
    const int part = ground.part_of(e);
    if (used[part] < cap[part]) {
      ++used[part];
      c.insert(e);
    }
  }
  if (c.size() != t) throw InvalidParameters("no center of size t fits the profile");
  return c;
}

// Random completion of `center` to a member of the block with `profile`.
Subset complete(const PartitionedGroundSet& ground, const Profile& profile, const Subset& center, Rng& rng) {
  Subset s = center;
  for (int i = 0; i < ground.parts(); ++i) {
    std::vector<int> free;
    for (int e = ground.first(i); e <= ground.last(i); ++e)
      if (!center.contains(e)) free.push_back(e);
    std::shuffle(free.begin(), free.end(), rng);
    const int need = profile[i] - (center & ground.part_mask(i)).size();
    for (int q = 0; q < need; ++q) s.insert(free[static_cast<std::size_t>(q)]);
  }
  return s;
}

}  // namespace

Subset random_block_member(const PartitionedGroundSet& ground, const Profile& profile, Rng& rng) {
  return complete(ground, profile, Subset{}, rng);
}

Subset random_subset(const PartitionedGroundSet& ground, Rng& rng) {
  Subset s;
  for (int e = 1; e <= ground.n(); ++e)
    if (rng() & 1u) s.insert(e);
  return s;
}

Family random_t_intersecting(const PartitionedGroundSet& ground, const Profile& profile, int t, std::size_t target,
                             Rng& rng) {
  profile.validate(ground);
  const Subset center = random_center(ground, profile.entries, t, rng);
  std::vector<Subset> members;
  const std::size_t attempts = 4 * target + 8;
  for (std::size_t q = 0; q < attempts && members.size() < target; ++q) {
    // Mostly star members, occasionally an arbitrary block member.
    const Subset cand = uniform(rng, 0, 3) == 0 ? random_block_member(ground, profile, rng)
                                                : complete(ground, profile, center, rng);
    const bool ok = std::all_of(members.begin(), members.end(),
                                [&](const Subset& m) { return m.intersection_size(cand) >= t; });
    if (ok && cand.size() >= t) members.push_back(cand);
  }
  return Family(ground, std::move(members));
}

std::pair<Family, Family> random_cross_t_intersecting(const PartitionedGroundSet& ground, const Profile& ra,
                                                      const Profile& rb, int t, std::size_t target, Rng& rng) {
  ra.validate(ground);
  rb.validate(ground);
  std::vector<int> cap(static_cast<std::size_t>(ground.parts()));
  for (int i = 0; i < ground.parts(); ++i) cap[i] = std::min(ra[i], rb[i]);
  const Subset center = random_center(ground, cap, t, rng);

  std::vector<Subset> a{complete(ground, ra, center, rng)};
  std::vector<Subset> b{complete(ground, rb, center, rng)};
  const std::size_t attempts = 6 * target + 8;
  for (std::size_t q = 0; q < attempts && (a.size() < target || b.size() < target); ++q) {
    const bool into_a = (q % 2 == 0) ? a.size() < target : b.size() >= target;
    const Profile& prof = into_a ? ra : rb;
    const Subset cand = uniform(rng, 0, 2) == 0 ? random_block_member(ground, prof, rng)
                                                : complete(ground, prof, center, rng);
    const auto& other = into_a ? b : a;
    const bool ok = std::all_of(other.begin(), other.end(),
                                [&](const Subset& m) { return m.intersection_size(cand) >= t; });
    if (ok) (into_a ? a : b).push_back(cand);
  }
  return {Family(ground, std::move(a)), Family(ground, std::move(b))};
}

}  // namespace tinter
