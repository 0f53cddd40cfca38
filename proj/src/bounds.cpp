#include "tinter/bounds.hpp"

#include <algorithm>
#include <map>

namespace tinter {

namespace {

ExactRatio chain_ratio(int n, int k, int level) { return ExactRatio(k - level, n - level); }

void check_single_block(int t, const PartitionedGroundSet& ground, const Profile& k) {
  k.validate(ground);
  for (int i = 0; i < ground.parts(); ++i) {
    if (k[i] < 1) throw InvalidParameters("need k_i >= 1 in every part");
    if (ground.part_size(i) <= k[i]) throw InvalidParameters("need n_i > k_i in every part");
  }
  if (t < 0 || t > k.total()) throw InvalidParameters("need 0 <= t <= k_1 + ... + k_p");
}

TDistribution counts_of(const PartitionedGroundSet& ground, const Subset& s) {
  return TDistribution{ground.profile_of(s)};
}

}  // namespace

std::vector<RatioEntry> ratio_entries(const PartitionedGroundSet& ground, const Profile& k) {
  k.validate(ground);
  std::vector<RatioEntry> out;
  for (int i = 0; i < ground.parts(); ++i)
    for (int j = 0; j < k[i]; ++j) out.push_back({i, j, chain_ratio(ground.part_size(i), k[i], j)});
  return out;
}

std::vector<TDistribution> algorithm1(int t, const PartitionedGroundSet& ground, const Profile& k) {
  check_single_block(t, ground, k);
  const int p = ground.parts();

  // Groups A(f) of equal ratio, in decreasing f.
  std::map<ExactRatio, std::vector<int>, std::greater<>> groups;  // ratio -> parts
  for (const auto& e : ratio_entries(ground, k)) groups[e.value].push_back(e.part);

  std::vector<int> taken(static_cast<std::size_t>(p), 0);
  const std::vector<int>* overshoot = nullptr;
  int c = 0;
  int count = 0;
  for (const auto& [ratio, parts] : groups) {
    if (count >= t) break;
    count += static_cast<int>(parts.size());
    if (count <= t) {
      for (int part : parts) ++taken[part];
    } else {
      c = static_cast<int>(parts.size()) - count + t;
      overshoot = &parts;
    }
  }

  std::vector<TDistribution> out;
  if (c == 0) {
    out.push_back(TDistribution{taken});
  } else {
    // Every c-subset of the overshooting group. Within a group each part
    // appears at most once since each chain is strictly decreasing.
    const auto& grp = *overshoot;
    const int m = static_cast<int>(grp.size());
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + c, true);
    do {
      TDistribution d{taken};
      for (int q = 0; q < m; ++q)
        if (pick[q]) ++d.entries[grp[q]];
      out.push_back(std::move(d));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExactCount g_value(int t, const PartitionedGroundSet& ground, const Profile& k) {
  const auto dists = algorithm1(t, ground, k);
  return star_size(ground, k, dists.front());
}

BoundReport brute_force_g(int t, const PartitionedGroundSet& ground, const Profile& k) {
  k.validate(ground);
  BoundReport r;
  r.value = -1;
  for (auto& d : all_distributions(t, ground.parts())) {
    ExactCount v = 1;
    for (int i = 0; i < ground.parts(); ++i) v *= binom(ground.part_size(i) - d[i], k[i] - d[i]);
    if (v > r.value) {
      r.value = v;
      r.optimal_distributions.clear();
    }
    if (v == r.value) r.optimal_distributions.push_back(std::move(d));
  }
  std::sort(r.optimal_distributions.begin(), r.optimal_distributions.end());
  r.hypotheses = theorem_hypotheses(t, ground, k);
  return r;
}

ExactRatio e_ratio_for_profile(const PartitionedGroundSet& ground, const Profile& k, const TDistribution& counts) {
  k.validate(ground);
  if (counts.size() != ground.parts()) throw InvalidParameters("count vector length does not match p");
  ExactRatio r = 1;
  for (int i = 0; i < ground.parts(); ++i) {
    if (counts[i] < 0 || counts[i] > k[i]) throw InvalidParameters("need |S ∩ X_i| <= k_i");
    for (int j = 0; j < counts[i]; ++j) r *= chain_ratio(ground.part_size(i), k[i], j);
  }
  return r;
}

ExactRatio e_ratio(const PartitionedGroundSet& ground, const Profile& k, const Subset& s) {
  return e_ratio_for_profile(ground, k, counts_of(ground, s));
}

ExactRatio e_ratio_by_binomials(const PartitionedGroundSet& ground, const Profile& k, const Subset& s) {
  const auto counts = counts_of(ground, s);
  for (int i = 0; i < ground.parts(); ++i)
    if (counts[i] > k[i]) throw InvalidParameters("need |S ∩ X_i| <= k_i");
  return ExactRatio(star_size(ground, k, counts), block_size(ground, k));
}

bool check_es2_for_profile(const PartitionedGroundSet& ground, const Profile& k, const TDistribution& counts) {
  k.validate(ground);
  const int p = ground.parts();
  if (counts.size() != p) throw InvalidParameters("count vector length does not match p");
  for (int i = 0; i < p; ++i)
    if (counts[i] < 0 || counts[i] > k[i]) throw InvalidParameters("need |T ∩ X_i| <= k_i");
  for (int j = 0; j < p; ++j) {
    if (counts[j] < 1) continue;
    const ExactRatio last_taken(k[j] - counts[j] + 1, ground.part_size(j) - counts[j] + 1);
    for (int i = 0; i < p; ++i) {
      if (ground.part_size(i) == counts[i]) continue;  // no untaken level left in part i
      const ExactRatio next_untaken(k[i] - counts[i], ground.part_size(i) - counts[i]);
      if (next_untaken > last_taken) return false;
    }
  }
  return true;
}

bool check_es2(const PartitionedGroundSet& ground, const Profile& k, int t, const Subset& center) {
  if (!ground.contains(center)) throw InvalidParameters("center outside ground set");
  if (center.size() != t) throw InvalidParameters("center must have exactly t elements");
  return check_es2_for_profile(ground, k, counts_of(ground, center));
}

FranklBound frankl_bound(const PartitionedGroundSet& ground, const Profile& k) {
  k.validate(ground);
  FranklBound r;
  r.ratio = 0;
  r.hypothesis = true;
  for (int i = 0; i < ground.parts(); ++i) {
    r.ratio = std::max(r.ratio, ExactRatio(k[i], ground.part_size(i)));
    if (ground.part_size(i) < 2 * k[i]) r.hypothesis = false;
  }
  r.absolute = numerator(r.ratio) * block_size(ground, k) / denominator(r.ratio);
  return r;
}

BoundReport t2_bound(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles) {
  profiles.validate(ground);
  if (profiles.parts() != ground.parts()) throw InvalidParameters("profile length does not match p");
  if (t < 0) throw InvalidParameters("need t >= 0");
  BoundReport r;
  r.value = -1;
  for (auto& d : all_distributions(t, ground.parts())) {
    ExactCount v = 0;
    for (const auto& prof : profiles.profiles()) {
      ExactCount term = 1;
      for (int i = 0; i < ground.parts() && term != 0; ++i)
        term *= binom(ground.part_size(i) - d[i], prof[i] - d[i]);
      v += term;
    }
    if (v > r.value) {
      r.value = v;
      r.optimal_distributions.clear();
    }
    if (v == r.value) r.optimal_distributions.push_back(std::move(d));
  }
  std::sort(r.optimal_distributions.begin(), r.optimal_distributions.end());
  r.hypotheses = theorem_hypotheses(t, ground, profiles);
  return r;
}

Subset compute_K(const PartitionedGroundSet& ground, const ProfileSet& profiles) {
  if (profiles.parts() != ground.parts()) throw InvalidParameters("profile length does not match p");
  Subset k;
  for (int i = 0; i < ground.parts(); ++i) {
    const int len = 2 * profiles.b(i) - 1;
    if (len > ground.part_size(i)) throw InvalidParameters("need 2 b_i - 1 <= n_i in every part");
    k |= ground.prefix(i, len);
  }
  return k;
}

int alpha(const Family& fam, const ProfileSet& profiles) {
  if (fam.empty()) throw EmptyFamily("alpha of an empty family is undefined");
  const Subset k = compute_K(fam.ground(), profiles);
  int best = fam.ground().n();
  for (const auto& f : fam) best = std::min(best, f.intersection_size(k));
  return best;
}

namespace {

ExactCount pow_int(long long base, int exp) {
  ExactCount r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

namespace {

void single_block_flags(int t, const PartitionedGroundSet& ground, const Profile& k, HypothesisFlags& f) {
  const int p = ground.parts();
  f.ratio_bound = true;
  f.product_bound = true;
  for (int i = 0; i < p; ++i) {
    const long long n = ground.part_size(i);
    if (n < 2LL * k[i]) f.ratio_bound = false;
    if (ExactCount(n) <= ExactCount(2) * (t + 1) * p * k[i] * k[i]) f.product_bound = false;
  }
}

bool union_flag(int t, const PartitionedGroundSet& ground, int b, int c) {
  bool ok = t <= c;
  const ExactCount threshold = ExactCount(2) * (t + 1) * ground.parts() * pow_int(b, t + 2);
  for (int i = 0; i < ground.parts(); ++i)
    if (ExactCount(ground.part_size(i)) <= threshold) ok = false;
  return ok;
}

}  // namespace

HypothesisFlags theorem_hypotheses(int t, const PartitionedGroundSet& ground, const Profile& k) {
  k.validate(ground);
  HypothesisFlags f;
  single_block_flags(t, ground, k, f);
  const auto [lo, hi] = std::minmax_element(k.entries.begin(), k.entries.end());
  if (*lo >= 1) f.union_bound = union_flag(t, ground, *hi, *lo);
  return f;
}

HypothesisFlags theorem_hypotheses(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles) {
  profiles.validate(ground);
  HypothesisFlags f;
  f.union_bound = union_flag(t, ground, profiles.b(), profiles.c());
  if (profiles.profiles().size() == 1) single_block_flags(t, ground, profiles.profiles().front(), f);
  return f;
}

bool star_lifting_hypothesis(int t, const PartitionedGroundSet& ground, const ProfileSet& profiles) {
  profiles.validate(ground);
  for (int m = 0; m < ground.parts(); ++m)
    if (ground.part_size(m) <= 2 * (t + 1) * profiles.b(m)) return false;
  return true;
}

}  // namespace tinter
