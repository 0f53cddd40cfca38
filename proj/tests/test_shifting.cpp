#include "doctest.h"

#include "tinter/random_families.hpp"
#include "tinter/shifting.hpp"
#include "tinter/verify.hpp"

using namespace tinter;

TEST_CASE("single-set compression") {
  CHECK(delta_ij(Subset{3, 4}, 1, 3) == Subset{1, 4});
  CHECK(delta_ij(Subset{1, 4}, 1, 4) == Subset{1, 4});
  CHECK(delta_ij(Subset{2, 5}, 1, 3) == Subset{2, 5});
  CHECK_THROWS_AS(delta_ij(Subset{2, 5}, 2, 2), InvalidParameters);
  CHECK_THROWS_AS(delta_ij(Subset{2, 5}, 0, 2), InvalidParameters);
}

TEST_CASE("family compression") {
  const PartitionedGroundSet g({4});
  CHECK(shift_family(Family(g, {Subset{2}, Subset{1}}), 1, 2) == Family(g, {Subset{1}, Subset{2}}));
  CHECK(shift_family(Family(g, {Subset{2, 3}}), 1, 3) == Family(g, {Subset{1, 2}}));
  CHECK_THROWS_AS(shift_family(Family(g, {Subset{2, 3}}), 1, 5), InvalidParameters);
  CHECK_THROWS_AS(shift_family(Family(g, {Subset{2, 3}}), 3, 3), InvalidParameters);

  // Size preservation on arbitrary families and arbitrary pairs.
  Rng rng(11);
  const PartitionedGroundSet g3({3, 4, 2});
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Subset> m;
    for (int q = 0; q < 10; ++q) m.push_back(random_subset(g3, rng));
    const Family fam(g3, m);
    for (int i = 1; i <= g3.n(); ++i)
      for (int j = 1; j <= g3.n(); ++j)
        if (i != j) CHECK(shift_family(fam, i, j).size() == fam.size());
  }
}

TEST_CASE("l-shift closure") {
  const PartitionedGroundSet g({4});
  const auto r = l_shift_closure(Family(g, {Subset{2, 3}}), 0);
  CHECK(r.family == Family(g, {Subset{1, 2}}));
  CHECK(r.steps == 2);

  const Family prefix(g, {Subset{1, 2}});
  CHECK(l_shift_closure(prefix, 0).family == prefix);
  CHECK(l_shift_closure(prefix, 0).steps == 0);

  const Family block = enumerate_block(PartitionedGroundSet({4, 3}), Profile{{2, 1}});
  CHECK(l_shift_closure(block, 0).family == block);
  CHECK(l_shift_closure(block, 1).family == block);
  CHECK_THROWS_AS(l_shift_closure(block, 2), InvalidParameters);
}

TEST_CASE("full shift closure") {
  const PartitionedGroundSet g({4, 4});
  const auto r = full_shift_closure(Family(g, {Subset{3, 4, 7, 8}}));
  CHECK(r.family == Family(g, {Subset{1, 2, 5, 6}}));
  CHECK(full_shift_closure(Family(g)).family.empty());
}

TEST_CASE("shiftedness predicate") {
  const PartitionedGroundSet g({4});
  CHECK(is_l_shifted(Family(g, {Subset{1, 2}}), 0));
  CHECK_FALSE(is_l_shifted(Family(g, {Subset{2, 3}}), 0));
  CHECK(is_l_shifted(enumerate_block(g, Profile{{2}}), 0));
  // Shifts never cross parts: {4} is shifted in a (3,1) ground set.
  CHECK(is_fully_shifted(Family(PartitionedGroundSet({3, 1}), {Subset{1, 4}})));
}

TEST_CASE("closure properties on random t-intersecting families") {
  Rng rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 3);
    std::vector<int> n;
    std::vector<int> k;
    for (int i = 0; i < p; ++i) {
      n.push_back(2 + static_cast<int>(rng() % 5));
      k.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n.back() - 1)));
    }
    const PartitionedGroundSet g(n);
    const Profile prof{k};
    const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(2, prof.total())));
    const Family fam = random_t_intersecting(g, prof, t, 10, rng);
    REQUIRE(is_t_intersecting(fam, t));

    for (int l = 0; l < p; ++l) {
      const auto once = l_shift_closure(fam, l);
      CHECK(is_l_shifted(once.family, l));
      CHECK(l_shift_closure(once.family, l).family == once.family);  // idempotent
      CHECK(l_shift_closure(once.family, l).steps == 0);
    }
    const auto closed = full_shift_closure(fam);
    CHECK(closed.family.size() == fam.size());
    CHECK(is_t_intersecting(closed.family, t));
    CHECK(is_fully_shifted(closed.family));
    CHECK(closed.steps <= shift_potential(fam) - shift_potential(closed.family));
    for (const auto& m : closed.family) CHECK(g.profile_of(m) == prof.entries);
  }
}

TEST_CASE("simultaneous compression keeps cross t-intersection") {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const PartitionedGroundSet g({6, 5});
    const Profile ra{{2, 2}};
    const Profile rb{{3, 1}};
    auto [a, b] = random_cross_t_intersecting(g, ra, rb, 2, 6, rng);
    REQUIRE(are_cross_t_intersecting(a, b, 2));
    const auto s = cross_shift_closure(a, b);
    CHECK(s.a.size() == a.size());
    CHECK(s.b.size() == b.size());
    CHECK(are_cross_t_intersecting(s.a, s.b, 2));
    CHECK(is_fully_shifted(s.a));
    CHECK(is_fully_shifted(s.b));
  }
}
