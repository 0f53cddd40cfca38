#pragma once

// Exact maximum t-intersecting subfamilies: a maximum clique in the graph on
// the space with edges {A, B : |A ∩ B| >= t}, solved by bit-parallel branch
// and bound with greedy-colouring bounds. Members with |A| < t are dropped
// up front since they cannot appear in any t-intersecting family.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tinter/bounds.hpp"
#include "tinter/core.hpp"

namespace tinter {

struct SearchOptions {
  std::uint64_t vertex_cap = 50'000;
  /// Stop after this many branch nodes; 0 means no limit. A stopped search
  /// reports proven_optimal = false and the best family found so far.
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
  /// Seed the incumbent with the largest trivial star in the space.
  bool seed_with_star = true;
};

struct SearchResult {
  ExactCount max_size;
  Family witness;
  std::optional<Subset> is_trivial_star;  // center, when the witness is a full t-star
  std::uint64_t nodes_explored = 0;
  ExactCount bound_used;                  // size of the initial incumbent
  bool proven_optimal = true;
};

/// Largest full t-star in the space: the center T (|T| = t) contained in the
/// most members, found by exact counting. Returns the star family.
Family best_trivial_star(const Family& space, int t);

SearchResult max_t_intersecting(const Family& space, int t, const SearchOptions& options = {});

struct BruteForceLimits {
  std::size_t subset_enumeration = 24;  // 2^n subfamily scan
  std::size_t clique_enumeration = 60;  // maximal-clique enumeration
};

/// Exhaustive oracle used to validate max_t_intersecting.
SearchResult brute_force_max(const Family& space, int t, const BruteForceLimits& limits = {});

/// Maximum over t-intersecting families that are l-shifted for every part.
/// The space must itself be closed under compressions (blocks, H2 and H3
/// spaces are). Branches on minimal elements of the compression order, so
/// every partial family stays a down-set.
SearchResult shifted_search(const Family& space, int t, const SearchOptions& options = {});

enum class Verdict { trivial, non_trivial, tie };
std::string to_string(Verdict v);

struct ConjectureReport {
  SearchResult search;
  Family best_star;
  std::optional<int> best_star_center;
  bool hypothesis_half = false;  // n_i >= 2 a_i for all i
  bool hypothesis_size = false;  // n_i > k - Σa + a_i for all but at most one i with a_i > 0
  Verdict verdict = Verdict::trivial;
};

/// Exact maximum intersecting subfamily of H3 against its largest star.
/// trivial: a star attains the maximum and the witness found is a star.
/// tie: the maximum equals the best star but the witness found is not a star.
/// non_trivial: the maximum exceeds every star.
ConjectureReport check_conjecture_h3(const PartitionedGroundSet& ground, int k, const std::vector<int>& a,
                                     const SearchOptions& options = {});

struct TheoremReport {
  SearchResult search;
  ExactCount g;
  std::vector<TDistribution> optimal_distributions;
  HypothesisFlags hypotheses;
  bool equality = false;        // max == g
  bool witness_is_star = false;
  bool center_satisfies_es2 = false;
  ExactCount gap;               // max - g
};

/// Exact maximum t-intersecting subfamily of a block against g.
TheoremReport check_theorem_t1(const PartitionedGroundSet& ground, const Profile& k, int t,
                               const SearchOptions& options = {});

}  // namespace tinter
