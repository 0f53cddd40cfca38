#pragma once

// Closed-form bounds for t-intersecting families in direct products and the
// extremal conditions attached to them. All arithmetic is exact.

#include <optional>
#include <vector>

#include "tinter/core.hpp"

namespace tinter {

/// One entry (k_i - j)/(n_i - j) of the ratio chain of part i.
struct RatioEntry {
  int part = 0;
  int level = 0;
  ExactRatio value;
};

/// Every ratio (k_i - j)/(n_i - j), 0 <= j < k_i, in part-major order.
std::vector<RatioEntry> ratio_entries(const PartitionedGroundSet& ground, const Profile& k);

/// Per-theorem hypothesis flags. Unset means the theorem does not apply to
/// the inputs that were supplied (e.g. the single-block theorems for an H2
/// profile set with several profiles).
struct HypothesisFlags {
  std::optional<bool> ratio_bound;   // n_i >= 2 k_i
  std::optional<bool> product_bound; // n_i > 2 (t+1) p k_i^2
  std::optional<bool> union_bound;   // t <= c and n_i > 2 (t+1) p b^(t+2)
};

struct BoundReport {
  std::vector<TDistribution> optimal_distributions;
  ExactCount value;
  HypothesisFlags hypotheses;
};

/// The greedy ratio-group procedure: take whole groups of equal ratios in
/// decreasing order while they fit into t; when a group overshoots, every
/// c-subset of it completes a distribution. Output is sorted and deduplicated.
/// Requires 0 <= t <= Σ k_i, k_i >= 1 and n_i > k_i.
std::vector<TDistribution> algorithm1(int t, const PartitionedGroundSet& ground, const Profile& k);

/// max over t-distributions of prod C(n_i - t_i, k_i - t_i).
ExactCount g_value(int t, const PartitionedGroundSet& ground, const Profile& k);

/// Brute-force argmax of the star size over every t-distribution; entries
/// with t_i > k_i count as zero. Independent of algorithm1.
BoundReport brute_force_g(int t, const PartitionedGroundSet& ground, const Profile& k);

/// e(S) via the product of chain ratios over P(S).
ExactRatio e_ratio(const PartitionedGroundSet& ground, const Profile& k, const Subset& s);
/// e(S) via the quotient of binomial products.
ExactRatio e_ratio_by_binomials(const PartitionedGroundSet& ground, const Profile& k, const Subset& s);
/// e for a per-part count vector (|S ∩ X_i|) without materializing S.
ExactRatio e_ratio_for_profile(const PartitionedGroundSet& ground, const Profile& k, const TDistribution& counts);

/// The extremal-center condition for T: for every part i and every part j
/// with |T ∩ X_j| >= 1,
///   (k_i - |T∩X_i|)/(n_i - |T∩X_i|) <= (k_j - |T∩X_j| + 1)/(n_j - |T∩X_j| + 1).
bool check_es2(const PartitionedGroundSet& ground, const Profile& k, int t, const Subset& center);
bool check_es2_for_profile(const PartitionedGroundSet& ground, const Profile& k, const TDistribution& counts);

struct FranklBound {
  ExactRatio ratio;       // max_i k_i / n_i
  ExactCount absolute;    // floor(ratio * |H_1|)
  bool hypothesis = false;  // n_i >= 2 k_i for all i
};

FranklBound frankl_bound(const PartitionedGroundSet& ground, const Profile& k);

/// max over t-distributions of Σ_{r ∈ R} prod C(n_i - t_i, r_i - t_i), with
/// every maximizing distribution. Brute force over distributions. t > c is
/// allowed; the union-bound flag records it.
BoundReport t2_bound(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles);

/// K = ∪_i Q_i(2 b_i - 1).
Subset compute_K(const PartitionedGroundSet& ground, const ProfileSet& profiles);

/// min over members of |F ∩ K|.
int alpha(const Family& fam, const ProfileSet& profiles);

HypothesisFlags theorem_hypotheses(int t, const PartitionedGroundSet& ground, const Profile& k);
HypothesisFlags theorem_hypotheses(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles);

/// n_m > 2 (t+1) b_m for every part: the hypothesis of the star-lifting lemma.
bool star_lifting_hypothesis(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles);

}  // namespace tinter
