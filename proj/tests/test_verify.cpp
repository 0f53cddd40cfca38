#include "doctest.h"

#include <set>

#include "tinter/random_families.hpp"
#include "tinter/shifting.hpp"
#include "tinter/verify.hpp"

using namespace tinter;

namespace {

// A star is a family equal to trivial_star(space, T) for some t-subset T.
std::optional<Subset> star_oracle(const Family& fam, const Family& space, int t) {
  if (fam.empty()) return std::nullopt;
  for (const auto& center : k_subsets(1, fam.ground().n(), t))
    if (trivial_star(space, center) == fam) return center;
  return std::nullopt;
}

}  // namespace

TEST_CASE("t-intersecting examples") {
  const PartitionedGroundSet g({6});
  CHECK(is_t_intersecting(Family(g, {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}), 1));
  CHECK_FALSE(is_t_intersecting(Family(g, {Subset{1, 2}, Subset{3, 4}}), 1));
  // A member smaller than t fails against itself.
  CHECK_FALSE(is_t_intersecting(Family(g, {Subset{1}}), 2));
  CHECK(is_t_intersecting(Family(g), 5));
  CHECK(is_t_intersecting(Family(g, {Subset{1, 2}, Subset{3, 4}}), 0));
}

TEST_CASE("the three-of-four family") {
  const PartitionedGroundSet g({8, 10});
  std::vector<Subset> members;
  const Subset first4{1, 2, 3, 4};
  for (const auto& a : enumerate_block(g, Profile{{4, 4}}))
    if (a.intersection_size(first4) >= 3) members.push_back(a);
  const Family fam(g, members);
  CHECK(fam.size() == 3570);
  CHECK(is_t_intersecting(fam, 2));
  CHECK_FALSE(is_t_intersecting(fam, 3));
}

TEST_CASE("cross intersection") {
  const PartitionedGroundSet g({5});
  const Family a(g, {Subset{1, 2}, Subset{1, 3}});
  const Family b(g, {Subset{1, 4}, Subset{2, 3}});
  CHECK(are_cross_t_intersecting(a, b, 1));
  CHECK_FALSE(are_cross_t_intersecting(a, Family(g, {Subset{4, 5}}), 1));
  CHECK_THROWS_AS(are_cross_t_intersecting(a, Family(g), 1), EmptyFamily);
}

TEST_CASE("full star detection") {
  const PartitionedGroundSet g({4, 4});
  const Family space = enumerate_block(g, Profile{{2, 2}});
  for (int t = 1; t <= 2; ++t)
    for (const auto& center : k_subsets(1, 8, t)) {
      const Family star = trivial_star(space, center);
      CHECK(is_full_t_star(star, space, t) == std::optional<Subset>(center));
      std::vector<Subset> fewer(star.begin() + 1, star.end());
      CHECK_FALSE(is_full_t_star(Family(g, fewer), space, t).has_value());
    }
  CHECK_FALSE(is_full_t_star(Family(g), space, 1).has_value());

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int t = 1 + trial % 2;
    const Family fam = random_t_intersecting(g, Profile{{2, 2}}, t, 1 + trial % 12, rng);
    CHECK(is_full_t_star(fam, space, t) == star_oracle(fam, space, t));
  }
}

TEST_CASE("single-part prefix inequality") {
  const PartitionedGroundSet g({6});
  std::vector<Subset> through12;
  for (const auto& s : k_subsets(1, 6, 3))
    if (s.contains(1) && s.contains(2)) through12.push_back(s);
  const Family a(g, through12);
  CHECK(check_lemma_21ii(a, a, 2, 3, 3));

  // Not shifted: precondition.
  const Family odd(g, {Subset{4, 5, 6}});
  CHECK_THROWS_AS(check_lemma_21ii(odd, odd, 1, 3, 3), PreconditionViolation);
  // Wrong member size.
  CHECK_THROWS_AS(check_lemma_21ii(a, a, 2, 2, 3), PreconditionViolation);

  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 4;
    const int r = 1 + trial % 3;
    const int s = r + (trial / 3) % 2;
    const int t = 1 + (trial / 7) % r;
    const PartitionedGroundSet gn({n});
    auto [fa, fb] = random_cross_t_intersecting(gn, Profile{{r}}, Profile{{s}}, t, 1 + trial % 9, rng);
    const auto shifted = cross_shift_closure(fa, fb);
    CHECK(check_lemma_21ii(shifted.a, shifted.b, t, r, s));
  }
}

TEST_CASE("multi-part prefix inequality") {
  // Sensitivity: without shifting the inequality can fail.
  const PartitionedGroundSet g1({6});
  const Family far(g1, {Subset{5, 6}});
  CHECK(are_cross_t_intersecting(far, far, 1));
  CHECK_FALSE(prefix_sum_inequality_holds(far, far, 1, Profile{{2}}, Profile{{2}}));

  const PartitionedGroundSet g({5, 5});
  CHECK_THROWS_AS(check_lemma_22(Family(g, {Subset{4, 5, 10}}), Family(g, {Subset{4, 5, 10}}), 2, Profile{{2, 1}},
                                 Profile{{2, 1}}),
                  PreconditionViolation);

  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Profile ra{{2, 1}};
    const Profile rb{{1 + trial % 2, 2}};
    const int t = 1 + trial % 2;
    auto [fa, fb] = random_cross_t_intersecting(g, ra, rb, t, 1 + trial % 10, rng);
    const auto shifted = cross_shift_closure(fa, fb);
    CHECK(check_lemma_22(shifted.a, shifted.b, t, ra, rb));
  }
}

TEST_CASE("star lifting on every intersecting family of small spaces") {
  // All intersecting families of 2-subsets of [9]: subfamilies of stars and of triangles.
  const PartitionedGroundSet g({9});
  const ProfileSet rs({Profile{{2}}});
  const Family space = enumerate_h2(g, rs);
  std::set<std::vector<Subset>> families;
  for (int x = 1; x <= 9; ++x) {
    std::vector<Subset> edges;
    for (const auto& e : space)
      if (e.contains(x)) edges.push_back(e);
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
      std::vector<Subset> f;
      for (std::size_t q = 0; q < edges.size(); ++q)
        if (mask >> q & 1) f.push_back(edges[q]);
      families.insert(Family(g, f).members());
    }
  }
  for (const auto& tri : k_subsets(1, 9, 3)) {
    const auto v = tri.elements();
    families.insert(Family(g, {Subset{v[0], v[1]}, Subset{v[0], v[2]}, Subset{v[1], v[2]}}).members());
  }
  std::size_t lifted = 0;
  for (const auto& members : families) {
    const Family fam(g, members);
    for (int i = 1; i <= 9; ++i)
      for (int j = i + 1; j <= 9; ++j) {
        const auto rep = check_lemma_24(fam, space, rs, 1, i, j);
        CHECK(rep.hypothesis);
        CHECK(rep.holds);
        lifted += rep.shifted_is_star ? 1 : 0;
      }
  }
  CHECK(lifted > 0);

  const PartitionedGroundSet g5({5});
  const ProfileSet r1({Profile{{1}}});
  const Family singletons = enumerate_h2(g5, r1);
  for (const auto& s : singletons) {
    const auto rep = check_lemma_24(Family(g5, {s}), singletons, r1, 1, 1, 5);
    CHECK(rep.shifted_is_star);
    CHECK(rep.original_is_star);
    CHECK(rep.holds);
  }
  CHECK_THROWS_AS(check_lemma_24(singletons, singletons, r1, 1, 1, 2), PreconditionViolation);
}
