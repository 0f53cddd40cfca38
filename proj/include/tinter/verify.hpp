#pragma once

// Intersection predicates, full-star detection, and falsification harnesses
// for the prefix inequalities satisfied by shifted cross t-intersecting
// families. Pairwise checks are O(|A| |B|) popcounts.

#include <optional>

#include "tinter/core.hpp"

namespace tinter {

/// |A ∩ B| >= t for every A, B in the family, A = B included.
bool is_t_intersecting(const Family& fam, int t);

/// |A ∩ B| >= t for A in `a`, B in `b`. Throws EmptyFamily if either is empty.
bool are_cross_t_intersecting(const Family& a, const Family& b, int t);

/// The center T (|T| = t) if `fam` is exactly the set of members of `space`
/// containing T. The empty family is never reported as a star.
std::optional<Subset> is_full_t_star(const Family& fam, const Family& space, int t);

/// Single-part prefix inequality |A ∩ B ∩ [r+s-t]| >= t for all A in a, B in b.
/// Throws PreconditionViolation unless p = 1, a ⊆ binom(X, r), b ⊆ binom(X, s),
/// t <= r <= s <= n, both families shifted and cross t-intersecting.
bool check_lemma_21ii(const Family& a, const Family& b, int t, int r, int s);

/// Σ_i |A ∩ B ∩ Q_i(r_i + s_i - 1)| >= t for all pairs, without checking any
/// hypothesis.
bool prefix_sum_inequality_holds(const Family& a, const Family& b, int t, const Profile& ra, const Profile& rb);

/// The multi-part prefix inequality under its hypotheses: n_i > r_i + s_i - 1,
/// members of a (b) have profile ra (rb), the pair is cross t-intersecting and
/// both are l-shifted for every l. Throws PreconditionViolation otherwise.
bool check_lemma_22(const Family& a, const Family& b, int t, const Profile& ra, const Profile& rb);

struct StarLiftingReport {
  bool hypothesis = false;       // n_m > 2 (t+1) b_m for all m
  bool shifted_is_star = false;  // Δ_{i,j}(F) is a full t-star in the space
  bool original_is_star = false;
  bool holds = false;            // shifted_is_star => original_is_star
};

/// If Δ_{i,j}(F) is a full t-star in the H2 space, F must be one as well.
/// Throws PreconditionViolation when F is not t-intersecting, not inside the
/// space, or i, j are not in a common part.
StarLiftingReport check_lemma_24(const Family& fam, const Family& space, const ProfileSet& profiles, int t, int i,
                                 int j);

}  // namespace tinter
