#include "tinter/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tinter/bounds.hpp"
#include "tinter/core.hpp"
#include "tinter/kneser.hpp"
#include "tinter/random_families.hpp"
#include "tinter/search.hpp"
#include "tinter/shifting.hpp"
#include "tinter/verify.hpp"

namespace tinter {

namespace {

std::string describe(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Every (n_i, k_i) pair with k_i in 1..5, n_i in k_i+1..12.
std::vector<std::pair<int, int>> part_choices() {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= 5; ++k)
    for (int n = k + 1; n <= 12; ++n) out.emplace_back(n, k);
  return out;
}

// Calls f(ground, k) for every grid point with p in 1..3.
template <class F>
void for_each_grid_point(F&& f) {
  const auto choices = part_choices();
  for (int p = 1; p <= 3; ++p) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
    while (true) {
      std::vector<int> n;
      std::vector<int> k;
      for (auto i : idx) {
        n.push_back(choices[i].first);
        k.push_back(choices[i].second);
      }
      f(PartitionedGroundSet(n), Profile{k});
      std::size_t q = 0;
      while (q < idx.size() && ++idx[q] == choices.size()) idx[q++] = 0;
      if (q == idx.size()) break;
    }
  }
}

// ---------------------------------------------------------------- 1

CriterionResult counterexample() {
  CriterionResult r;
  const PartitionedGroundSet ground({8, 10});
  const Profile k{{4, 4}};
  const auto dists = algorithm1(2, ground, k);
  const ExactCount g = g_value(2, ground, k);
  const Family block = enumerate_block(ground, k);
  std::vector<Subset> members;
  const Subset first4 = Subset::range(1, 4);
  for (const auto& a : block)
    if (a.intersection_size(first4) >= 3) members.push_back(a);
  const Family fam(ground, std::move(members));
  const bool two_int = is_t_intersecting(fam, 2);
  const bool unique_20 = dists.size() == 1 && dists.front().entries == std::vector<int>{2, 0};
  r.passed = g == 3150 && unique_20 && two_int && fam.size() == 3570 && ExactCount(fam.size()) > g;
  std::ostringstream os;
  os << "g=" << g << " distributions=" << dists.size() << (unique_20 ? " {(2,0)}" : " (unexpected)")
     << " |{A : |A∩[4]|>=3}|=" << fam.size() << " 2-intersecting=" << (two_int ? "yes" : "no");
  r.detail = os.str();
  return r;
}

// ---------------------------------------------------------------- 2

CriterionResult algorithm1_grid() {
  CriterionResult r;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string witness;
  for_each_grid_point([&](const PartitionedGroundSet& ground, const Profile& k) {
    for (int t = 1; t <= 4; ++t) {
      if (t > k.total()) continue;
      ++checked;
      const auto fast = algorithm1(t, ground, k);
      const auto oracle = brute_force_g(t, ground, k).optimal_distributions;
      if (fast != oracle) {
        if (mismatches++ == 0) witness = "n=" + describe(ground.sizes()) + " k=" + describe(k.entries) + " t=" + std::to_string(t);
      }
    }
  });
  r.passed = mismatches == 0 && checked > 0;
  r.detail = std::to_string(checked) + " instances, " + std::to_string(mismatches) + " mismatches" +
             (witness.empty() ? "" : "; first at " + witness);
  return r;
}

// ---------------------------------------------------------------- 3

CriterionResult extremal_condition_grid() {
  CriterionResult r;
  std::size_t profiles_checked = 0;
  std::size_t mismatches = 0;
  std::string witness;
  for_each_grid_point([&](const PartitionedGroundSet& ground, const Profile& k) {
    for (int t = 1; t <= 4; ++t) {
      if (t > k.total()) continue;
      std::vector<TDistribution> feasible;
      for (auto& d : all_distributions(t, ground.parts())) {
        bool ok = true;
        for (int i = 0; i < ground.parts(); ++i) ok = ok && d[i] <= k[i];
        if (ok) feasible.push_back(std::move(d));
      }
      std::vector<ExactRatio> e;
      e.reserve(feasible.size());
      for (const auto& d : feasible) e.push_back(e_ratio_for_profile(ground, k, d));
      const ExactRatio best = *std::max_element(e.begin(), e.end());
      for (std::size_t q = 0; q < feasible.size(); ++q) {
        ++profiles_checked;
        const bool maximal = e[q] == best;
        const bool es2 = check_es2_for_profile(ground, k, feasible[q]);
        if (maximal != es2 && mismatches++ == 0)
          witness = "n=" + describe(ground.sizes()) + " k=" + describe(k.entries) + " t=" + std::to_string(t) +
                    " profile=" + describe(feasible[q].entries) + (maximal ? " maximal but fails" : " passes but not maximal");
      }
    }
  });
  r.passed = mismatches == 0 && profiles_checked > 0;
  r.detail = std::to_string(profiles_checked) + " center profiles, " + std::to_string(mismatches) + " mismatches" +
             (witness.empty() ? "" : "; first: " + witness);
  return r;
}

// ---------------------------------------------------------------- 4

CriterionResult shifting_properties() {
  CriterionResult r;
  Rng rng(20240401);
  constexpr int kTrials = 10'000;
  int failures = 0;
  std::string witness;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) witness = what;
  };
  for (int trial = 0; trial < kTrials; ++trial) {
    const int p = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> n;
    std::vector<int> k;
    for (int i = 0; i < p; ++i) {
      n.push_back(std::uniform_int_distribution<int>(2, 6)(rng));
      k.push_back(std::uniform_int_distribution<int>(1, n.back() - 1)(rng));
    }
    const PartitionedGroundSet ground(n);
    const Profile prof{k};
    const int t = std::uniform_int_distribution<int>(1, std::min(2, prof.total()))(rng);
    const auto size = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 12)(rng));
    const Family fam = random_t_intersecting(ground, prof, t, size, rng);

    // One random Δ_{i,j} inside a part.
    const int part = std::uniform_int_distribution<int>(0, p - 1)(rng);
    if (ground.part_size(part) >= 2) {
      int i = std::uniform_int_distribution<int>(ground.first(part), ground.last(part))(rng);
      int j = std::uniform_int_distribution<int>(ground.first(part), ground.last(part) - 1)(rng);
      if (j >= i) ++j;
      if (i > j) std::swap(i, j);
      const Family shifted = shift_family(fam, i, j);
      if (shifted.size() != fam.size()) fail("size changed under a single compression");
      if (!is_t_intersecting(shifted, t)) fail("t-intersection lost under a single compression");
    }
    // Size preservation on an arbitrary (not intersecting) family as well.
    std::vector<Subset> loose;
    for (int q = 0; q < 8; ++q) loose.push_back(random_subset(ground, rng));
    const Family arbitrary(ground, std::move(loose));
    const int x = std::uniform_int_distribution<int>(1, ground.n())(rng);
    const int y = std::uniform_int_distribution<int>(1, ground.n())(rng);
    if (x != y && shift_family(arbitrary, x, y).size() != arbitrary.size()) fail("size changed on arbitrary family");

    const auto closed = full_shift_closure(fam);
    const std::size_t before = shift_potential(fam);
    const std::size_t after = shift_potential(closed.family);
    if (closed.steps > before - after) fail("closure took more steps than the potential drop");
    if (closed.steps > static_cast<std::size_t>(ground.n()) * fam.size() * static_cast<std::size_t>(ground.n()))
      fail("closure exceeded n*|F|*max element steps");
    if (closed.family.size() != fam.size()) fail("closure changed the size");
    if (!is_t_intersecting(closed.family, t)) fail("closure lost t-intersection");
    for (int l = 0; l < p; ++l)
      if (!is_l_shifted(closed.family, l)) fail("closure output not l-shifted");
  }
  r.passed = failures == 0;
  r.detail = std::to_string(kTrials) + " trials, " + std::to_string(failures) + " failures" +
             (witness.empty() ? "" : "; first: " + witness);
  return r;
}

// ---------------------------------------------------------------- 5

CriterionResult prefix_lemmas() {
  CriterionResult r;
  Rng rng(777);
  constexpr int kTrials = 10'000;
  int lemma22_runs = 0;
  int lemma21_runs = 0;
  int failures = 0;
  std::string witness;
  for (int trial = 0; trial < kTrials; ++trial) {
    const int p = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> n;
    std::vector<int> ra;
    std::vector<int> rb;
    for (int i = 0; i < p; ++i) {
      const int ni = std::uniform_int_distribution<int>(3, 10)(rng);
      // Need r_i + s_i - 1 < n_i with r_i, s_i >= 1.
      const int a = std::uniform_int_distribution<int>(1, ni / 2)(rng);
      const int b = std::uniform_int_distribution<int>(1, ni - a)(rng);
      n.push_back(ni);
      ra.push_back(a);
      rb.push_back(b);
    }
    const PartitionedGroundSet ground(n);
    const Profile pa{ra};
    const Profile pb{rb};
    int common = 0;
    for (int i = 0; i < p; ++i) common += std::min(ra[i], rb[i]);
    const int t = std::uniform_int_distribution<int>(1, std::min(3, common))(rng);
    const auto size = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 8)(rng));
    auto [a, b] = random_cross_t_intersecting(ground, pa, pb, t, size, rng);
    const auto shifted = cross_shift_closure(a, b);
    try {
      ++lemma22_runs;
      if (!check_lemma_22(shifted.a, shifted.b, t, pa, pb) && failures++ == 0)
        witness = "multi-part prefix inequality failed at n=" + describe(n);
      if (p == 1) {
        const bool swap = ra[0] > rb[0];
        const Family& lo = swap ? shifted.b : shifted.a;
        const Family& hi = swap ? shifted.a : shifted.b;
        const int r0 = std::min(ra[0], rb[0]);
        const int s0 = std::max(ra[0], rb[0]);
        if (t <= r0) {
          ++lemma21_runs;
          if (!check_lemma_21ii(lo, hi, t, r0, s0) && failures++ == 0)
            witness = "single-part prefix inequality failed at n=" + describe(n);
        }
      }
    } catch (const PreconditionViolation& e) {
      if (failures++ == 0) witness = std::string("generator produced invalid instance: ") + e.what();
    }
  }

  // Sensitivity: without shiftedness the inequality can fail.
  bool sensitive = false;
  std::string sensitivity;
  Rng srng(4242);
  for (int attempt = 0; attempt < 10'000 && !sensitive; ++attempt) {
    const PartitionedGroundSet ground({7, 7});
    const Profile prof{{2, 2}};
    auto [a, b] = random_cross_t_intersecting(ground, prof, prof, 2, 3, srng);
    if (!prefix_sum_inequality_holds(a, b, 2, prof, prof)) {
      sensitive = true;
      sensitivity = "non-shifted witness over (7,7): A0=" + a.members().front().to_string() +
                    " B0=" + b.members().front().to_string();
    }
  }
  r.passed = failures == 0 && sensitive;
  r.detail = std::to_string(lemma22_runs) + " multi-part and " + std::to_string(lemma21_runs) +
             " single-part instances, " + std::to_string(failures) + " failures; " +
             (sensitive ? sensitivity : "no sensitivity witness found") + (witness.empty() ? "" : "; " + witness);
  return r;
}

// ---------------------------------------------------------------- 6

CriterionResult ekr_cross_check() {
  CriterionResult r;
  const std::vector<std::tuple<int, int, int>> cases{{5, 2, 4}, {7, 3, 15}, {9, 4, 56}};
  bool ok = true;
  std::ostringstream os;
  for (auto [n, k, expected] : cases) {
    const PartitionedGroundSet ground({n});
    const Family space = enumerate_block(ground, Profile{{k}});
    const auto res = max_t_intersecting(space, 1);
    const bool good = res.proven_optimal && res.max_size == expected && binom(n - 1, k - 1) == expected &&
                      res.is_trivial_star.has_value();
    ok = ok && good;
    os << "C(" << n << "," << k << "): max=" << res.max_size << (res.is_trivial_star ? " star" : " non-star")
       << " nodes=" << res.nodes_explored << "; ";
  }
  r.passed = ok;
  r.detail = os.str();
  return r;
}

// ---------------------------------------------------------------- 7

CriterionResult search_oracle() {
  CriterionResult r;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::string witness;
  auto check = [&](const Family& space, int t, const std::string& label) {
    if (space.size() > 24) return;
    ++instances;
    const auto fast = max_t_intersecting(space, t);
    const auto oracle = brute_force_max(space, t);
    const bool witness_ok = is_t_intersecting(fast.witness, t) &&
                            std::all_of(fast.witness.begin(), fast.witness.end(),
                                        [&](const Subset& s) { return space.contains(s); });
    if ((fast.max_size != oracle.max_size || !witness_ok) && mismatches++ == 0) witness = label;
  };
  for (int p = 1; p <= 2; ++p) {
    std::vector<std::tuple<int, int>> part;  // (n, k)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= std::min(3, n); ++k) part.emplace_back(n, k);
    std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
    while (true) {
      std::vector<int> n;
      std::vector<int> k;
      for (auto i : idx) {
        n.push_back(std::get<0>(part[i]));
        k.push_back(std::get<1>(part[i]));
      }
      const PartitionedGroundSet ground(n);
      const Profile prof{k};
      if (block_size(ground, prof) <= 24) {
        const Family space = enumerate_block(ground, prof);
        for (int t = 0; t <= 2; ++t)
          check(space, t, "block n=" + describe(n) + " k=" + describe(k) + " t=" + std::to_string(t));
      }
      if (p == 2) {
        // Two-profile unions inside the same grid.
        for (int dk = 0; dk < 2; ++dk) {
          std::vector<int> k2 = k;
          k2[static_cast<std::size_t>(dk)] -= 1;
          if (k2[static_cast<std::size_t>(dk)] < 1) continue;
          const ProfileSet rs({prof, Profile{k2}});
          const auto total = block_size(ground, prof) + block_size(ground, Profile{k2});
          if (total > 24) continue;
          const Family space = enumerate_h2(ground, rs);
          for (int t = 0; t <= 2; ++t)
            check(space, t, "H2 n=" + describe(n) + " R={" + describe(k) + describe(k2) + "} t=" + std::to_string(t));
        }
      }
      std::size_t q = 0;
      while (q < idx.size() && ++idx[q] == part.size()) idx[q++] = 0;
      if (q == idx.size()) break;
    }
  }
  r.passed = mismatches == 0 && instances > 0;
  r.detail = std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches" +
             (witness.empty() ? "" : "; first at " + witness);
  return r;
}

// ---------------------------------------------------------------- 8

std::size_t union_find_components(const KneserParams& params) {
  const KneserProduct graph(params);
  std::vector<std::size_t> parent(graph.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<KneserVertex> vertices;
  for (std::size_t v = 0; v < graph.size(); ++v) vertices.push_back(graph.vertex(v));
  std::size_t components = graph.size();
  for (std::size_t u = 0; u < graph.size(); ++u)
    for (std::size_t v = u + 1; v < graph.size(); ++v)
      if (product_adjacent(vertices[u], vertices[v], params)) {
        const auto a = find(u);
        const auto b = find(v);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
  return components;
}

CriterionResult kneser_connectivity() {
  CriterionResult r;
  struct Case {
    std::string label;
    std::vector<std::pair<int, int>> pairs;
    bool connected;
  };
  const std::vector<Case> cases{{"KG(5,2)", {{5, 2}}, true},
                                {"KG(7,3)", {{7, 3}}, true},
                                {"KG(5,2)xKG(5,2)", {{5, 2}, {5, 2}}, true},
                                {"KG(5,2)xKG(7,3)", {{5, 2}, {7, 3}}, true},
                                {"KG(4,2)", {{4, 2}}, false}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : cases) {
    const KneserParams params(c.pairs);
    const bool connected = is_connected(params);
    bool agree = true;
    if (params.vertex_count() <= 10'000) agree = (union_find_components(params) == 1) == connected;
    ok = ok && connected == c.connected && agree;
    os << c.label << "=" << (connected ? "connected" : "disconnected") << (agree ? "" : " (union-find disagrees)")
       << "; ";
  }
  r.passed = ok;
  r.detail = os.str();
  return r;
}

// ---------------------------------------------------------------- 9

CriterionResult union_bound_plumbing() {
  CriterionResult r;
  const PartitionedGroundSet ground({6, 6});
  const auto rep = t2_bound(1, ground, ProfileSet({Profile{{2, 2}}, Profile{{3, 2}}}));
  const bool exact = rep.value == 225 && rep.optimal_distributions.size() == 1 &&
                     rep.optimal_distributions.front().entries == std::vector<int>{1, 0};
  Rng rng(99);
  int agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int p = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> n;
    std::vector<int> k;
    for (int i = 0; i < p; ++i) {
      k.push_back(std::uniform_int_distribution<int>(1, 5)(rng));
      n.push_back(std::uniform_int_distribution<int>(k.back() + 1, 12)(rng));
    }
    const Profile prof{k};
    const int t = std::uniform_int_distribution<int>(1, std::min(4, prof.total()))(rng);
    const PartitionedGroundSet g(n);
    const auto single = t2_bound(t, g, ProfileSet({prof}));
    if (single.value == g_value(t, g, prof) && single.optimal_distributions == algorithm1(t, g, prof)) ++agree;
  }
  r.passed = exact && agree == 100;
  r.detail = "R={(2,2),(3,2)} n=(6,6) t=1: value=" + rep.value.str() +
             (exact ? " at (1,0)" : " (unexpected)") + "; singleton R agrees with g on " + std::to_string(agree) + "/100";
  return r;
}

// ---------------------------------------------------------------- 10

CriterionResult ratio_bound_sanity() {
  CriterionResult r;
  const PartitionedGroundSet ground({4, 4});
  const Profile k{{2, 2}};
  const auto fb = frankl_bound(ground, k);
  const auto res = max_t_intersecting(enumerate_block(ground, k), 1);
  r.passed = res.proven_optimal && fb.ratio == ExactRatio(1, 2) && fb.absolute == 18 && res.max_size <= fb.absolute;
  r.detail = "exact maximum intersecting family " + res.max_size.str() + " <= bound " + fb.absolute.str() + " of 36";
  return r;
}

}  // namespace

std::vector<AcceptanceCriterion> acceptance_criteria() {
  return {
      {1, "counterexample n=(8,10) k=(4,4) t=2", 5.0, counterexample},
      {2, "greedy ratio algorithm equals brute-force argmax", 60.0, algorithm1_grid},
      {3, "extremal condition iff maximal e-ratio", 0.0, extremal_condition_grid},
      {4, "shifting properties (10^4 trials)", 0.0, shifting_properties},
      {5, "prefix inequalities for shifted cross t-intersecting pairs", 0.0, prefix_lemmas},
      {6, "EKR cross-check by exact search", 120.0, ekr_cross_check},
      {7, "clique search equals brute-force oracle", 60.0, search_oracle},
      {8, "Kneser product connectivity", 0.0, kneser_connectivity},
      {9, "H2 bound plumbing", 0.0, union_bound_plumbing},
      {10, "ratio bound sanity n=(4,4) k=(2,2)", 10.0, ratio_bound_sanity},
  };
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only) {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.id = c.id;
    res.name = c.name;
    res.time_limit = c.time_limit;
    if (c.time_limit > 0 && res.seconds > c.time_limit) {
      res.passed = false;
      res.detail += " [over time limit]";
    }
    out << (res.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << res.id << "  " << res.name << "  ("
        << std::fixed << std::setprecision(2) << res.seconds << " s";
    if (c.time_limit > 0) out << " / limit " << std::setprecision(0) << c.time_limit << " s";
    out << ")\n      " << res.detail << '\n';
    out.flush();
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace tinter
