#include "doctest.h"

#include <random>

#include "tinter/core.hpp"

using namespace tinter;

namespace {

ExactCount factorial(int n) {
  ExactCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Every subset of [n] as a bitmask-built Subset.
std::vector<Subset> power_set(int n) {
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset s;
    for (int e = 1; e <= n; ++e)
      if (mask >> (e - 1) & 1u) s.insert(e);
    out.push_back(s);
  }
  return out;
}

// Part counts computed element by element.
std::vector<int> naive_profile(const PartitionedGroundSet& g, const Subset& s) {
  std::vector<int> c(static_cast<std::size_t>(g.parts()), 0);
  for (int e : s.elements()) ++c[static_cast<std::size_t>(g.part_of(e))];
  return c;
}

}  // namespace

TEST_CASE("binom matches the factorial formula") {
  for (int n = 0; n <= 70; ++n)
    for (int k = -1; k <= n + 1; ++k) {
      const ExactCount expected = (k < 0 || k > n) ? ExactCount(0) : factorial(n) / (factorial(k) * factorial(n - k));
      CHECK(binom(n, k) == expected);
    }
  CHECK(binom(10, 4) == 210);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(-3, 1) == 0);
  CHECK(binom(100, 50) == ExactCount("100891344545564193334812497256"));
}

TEST_CASE("subset basics") {
  Subset s{5, 1, 3};
  CHECK(s.size() == 3);
  CHECK(s.elements() == std::vector<int>{1, 3, 5});
  CHECK(s.to_string() == "{1,3,5}");
  CHECK(s.max_element() == 5);
  CHECK(Subset{}.max_element() == 0);
  CHECK(Subset{1, 2}.is_subset_of(Subset{1, 2, 7}));
  CHECK_FALSE(Subset{1, 8}.is_subset_of(Subset{1, 2, 7}));
  CHECK((Subset{1, 2, 3} & Subset{2, 3, 4}) == Subset{2, 3});
  CHECK((Subset{1, 2, 3} - Subset{2}) == Subset{1, 3});
  CHECK(Subset::range(3, 5) == Subset{3, 4, 5});
  CHECK(Subset::range(3, 2).empty());
  CHECK(Subset{kMaxElements}.max_element() == kMaxElements);
  CHECK_THROWS_AS(Subset{0}, InvalidParameters);
  CHECK_THROWS_AS(Subset{kMaxElements + 1}, InvalidParameters);

  // Colex: compare largest differing element.
  CHECK(Subset{1, 2, 3} < Subset{1, 2, 4});
  CHECK(Subset{3, 4} < Subset{1, 5});
  CHECK(Subset{1, 70} > Subset{2, 69});
}

TEST_CASE("ground set offsets and part lookup") {
  const PartitionedGroundSet g({3, 1, 4});
  CHECK(g.n() == 8);
  CHECK(g.parts() == 3);
  CHECK(g.first(0) == 1);
  CHECK(g.last(0) == 3);
  CHECK(g.first(1) == 4);
  CHECK(g.last(1) == 4);
  CHECK(g.first(2) == 5);
  CHECK(g.last(2) == 8);
  for (int e = 1; e <= g.n(); ++e) {
    const int part = g.part_of(e);
    CHECK(g.first(part) <= e);
    CHECK(e <= g.last(part));
  }
  CHECK(g.prefix(2, 2) == Subset{5, 6});
  CHECK(g.prefix(2, 0).empty());
  CHECK_THROWS_AS(g.prefix(2, 5), InvalidParameters);
  CHECK_THROWS_AS(g.part_of(0), InvalidParameters);
  CHECK_THROWS_AS(g.part_of(9), InvalidParameters);
  CHECK_THROWS_AS(PartitionedGroundSet({}), InvalidParameters);
  CHECK_THROWS_AS(PartitionedGroundSet({3, 0}), InvalidParameters);
  CHECK_FALSE(PartitionedGroundSet({100, 100}).fits_subsets());
}

TEST_CASE("profile_of agrees with element-wise counting") {
  std::mt19937_64 rng(5);
  const PartitionedGroundSet g({7, 64, 20, 5});
  for (int trial = 0; trial < 500; ++trial) {
    Subset s;
    for (int e = 1; e <= g.n(); ++e)
      if (rng() % 3 == 0) s.insert(e);
    CHECK(g.profile_of(s) == naive_profile(g, s));
  }
}

TEST_CASE("profile sets derive b_i, b and c") {
  const ProfileSet rs({Profile{{2, 2}}, Profile{{3, 2}}, Profile{{2, 2}}});
  CHECK(rs.profiles().size() == 2);
  CHECK(rs.b(0) == 3);
  CHECK(rs.b(1) == 2);
  CHECK(rs.b() == 3);
  CHECK(rs.c() == 2);
  CHECK_THROWS_AS(ProfileSet({}), InvalidParameters);
  CHECK_THROWS_AS(ProfileSet({Profile{{0, 2}}}), InvalidParameters);
  CHECK_THROWS_AS(ProfileSet({Profile{{1, 2}}, Profile{{1}}}), InvalidParameters);
  CHECK_THROWS_AS((Profile{{5, 1}}.validate(PartitionedGroundSet({4, 4}))), InvalidParameters);
  CHECK_THROWS_AS((Profile{{1}}.validate(PartitionedGroundSet({4, 4}))), InvalidParameters);
}

TEST_CASE("all t-distributions") {
  for (int p = 1; p <= 4; ++p)
    for (int t = 0; t <= 5; ++t) {
      const auto d = all_distributions(t, p);
      CHECK(ExactCount(d.size()) == binom(t + p - 1, p - 1));
      for (const auto& x : d) CHECK(x.total() == t);
    }
  CHECK(all_distributions(2, 2).front().entries == std::vector<int>{2, 0});
}

TEST_CASE("k_subsets lists every k-subset in colex order") {
  const auto s = k_subsets(3, 5, 2);
  CHECK(s.size() == 10);
  CHECK(s.front() == Subset{3, 4});
  CHECK(s.back() == Subset{6, 7});
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(k_subsets(1, 4, 0).size() == 1);
  CHECK(k_subsets(1, 4, 5).empty());
}

TEST_CASE("block enumeration examples") {
  const PartitionedGroundSet g44({4, 4});
  CHECK(enumerate_block(g44, Profile{{2, 2}}).size() == 36);
  const auto full = enumerate_block(PartitionedGroundSet({3}), Profile{{3}});
  REQUIRE(full.size() == 1);
  CHECK(full.members().front() == Subset{1, 2, 3});
  CHECK(enumerate_block(PartitionedGroundSet({8, 10}), Profile{{4, 4}}).size() == 14700);
  CHECK_THROWS_AS(enumerate_block(g44, Profile{{2, 2}}, 35), InstanceTooLarge);
  CHECK_THROWS_AS(enumerate_block(g44, Profile{{5, 2}}), InvalidParameters);
}

TEST_CASE("block sizes: product formula against filtering the power set") {
  const std::vector<std::vector<int>> grounds{{4, 4}, {3, 2, 3}, {6}, {1, 5, 2}, {8, 8}, {5, 5, 6}};
  for (const auto& sizes : grounds) {
    const PartitionedGroundSet g(sizes);
    const auto all = power_set(g.n());
    // Every profile of this ground set.
    std::vector<int> r(sizes.size(), 0);
    while (true) {
      const Profile prof{r};
      const Family block = enumerate_block(g, prof);
      std::vector<Subset> expected;
      for (const auto& s : all)
        if (naive_profile(g, s) == r) expected.push_back(s);
      CHECK(block.size() == expected.size());
      CHECK(ExactCount(block.size()) == block_size(g, prof));
      CHECK(block == Family(g, expected));
      std::size_t q = 0;
      while (q < r.size() && ++r[q] > sizes[q]) r[q++] = 0;
      if (q == r.size()) break;
    }
  }
}

TEST_CASE("H2 enumeration") {
  const PartitionedGroundSet g44({4, 4});
  CHECK(enumerate_h2(g44, ProfileSet({Profile{{1, 1}}, Profile{{2, 2}}})).size() == 52);
  CHECK(enumerate_h2(g44, ProfileSet({Profile{{2, 2}}})) == enumerate_block(g44, Profile{{2, 2}}));
  CHECK(enumerate_h2(PartitionedGroundSet({3, 3}), ProfileSet({Profile{{1, 2}}, Profile{{2, 1}}})).size() == 18);
  CHECK_THROWS_AS(enumerate_h2(g44, ProfileSet({Profile{{1, 1}}, Profile{{2, 2}}}), 51), InstanceTooLarge);
}

TEST_CASE("H3 enumeration") {
  const PartitionedGroundSet g44({4, 4});
  const std::vector<int> a11{1, 1};
  const std::vector<int> a00{0, 0};
  CHECK(enumerate_h3(g44, 4, a11).size() == 68);
  CHECK(enumerate_h3(g44, 4, a00).size() == 70);
  const std::vector<int> a20{2, 0};
  CHECK(enumerate_h3(PartitionedGroundSet({3, 3}), 3, a20).size() == 10);

  // Against filtering all k-subsets, and as a union of admissible blocks.
  const PartitionedGroundSet g({3, 4, 3});
  for (int k = 0; k <= 6; ++k) {
    const std::vector<int> a{1, 0, 2};
    if (k < 3) {
      CHECK_THROWS_AS(enumerate_h3(g, k, a), InvalidParameters);
      continue;
    }
    std::vector<Subset> expected;
    for (const auto& s : power_set(g.n())) {
      const auto prof = naive_profile(g, s);
      if (s.size() == k && prof[0] >= 1 && prof[2] >= 2) expected.push_back(s);
    }
    const Family h3 = enumerate_h3(g, k, a);
    CHECK(h3 == Family(g, expected));
    std::size_t from_blocks = 0;
    for (const auto& prof : h3_profiles(g, k, a)) from_blocks += enumerate_block(g, prof).size();
    CHECK(from_blocks == h3.size());
  }
  const std::vector<int> bad{4, 0};
  CHECK_THROWS_AS(enumerate_h3(g44, 4, bad), InvalidParameters);
  const std::vector<int> short_a{1};
  CHECK_THROWS_AS(enumerate_h3(g44, 4, short_a), InvalidParameters);
}

TEST_CASE("trivial stars and star sizes") {
  const PartitionedGroundSet g810({8, 10});
  const Profile k44{{4, 4}};
  const Family block = enumerate_block(g810, k44);
  CHECK(trivial_star(block, Subset{1, 2}).size() == 3150);
  CHECK(trivial_star(block, Subset{}) == block);
  CHECK(star_size(g810, k44, TDistribution{{2, 0}}) == 3150);
  CHECK(star_size(g810, k44, TDistribution{{1, 1}}) == 2940);
  CHECK(star_size(g810, k44, TDistribution{{0, 0}}) == 14700);
  CHECK_THROWS_AS(star_size(g810, k44, TDistribution{{5, 0}}), InvalidParameters);
  CHECK_THROWS_AS(star_size(g810, k44, TDistribution{{1}}), InvalidParameters);

  const PartitionedGroundSet g44({4, 4});
  const Profile k22{{2, 2}};
  const Family b22 = enumerate_block(g44, k22);
  CHECK(trivial_star(b22, Subset{1, 5}).size() == 9);

  // |star(T)| = star_size at T's profile, or 0 when T does not fit.
  for (int size = 0; size <= 4; ++size)
    for (const auto& center : k_subsets(1, 8, size)) {
      const auto prof = g44.profile_of(center);
      const bool fits = prof[0] <= 2 && prof[1] <= 2;
      const ExactCount expected = fits ? star_size(g44, k22, TDistribution{prof}) : ExactCount(0);
      CHECK(ExactCount(trivial_star(b22, center).size()) == expected);
    }
}

TEST_CASE("families deduplicate and reject foreign members") {
  const PartitionedGroundSet g({3});
  const Family f(g, {Subset{2}, Subset{1}, Subset{2}});
  CHECK(f.size() == 2);
  CHECK(f.members().front() == Subset{1});
  CHECK(f.contains(Subset{2}));
  CHECK_FALSE(f.contains(Subset{3}));
  CHECK_THROWS_AS(Family(g, {Subset{4}}), InvalidParameters);
}
