#pragma once

// Ground-set partitions, bit-vector subsets, exact arithmetic and the
// enumeration of direct-product families (blocks, unions of blocks, and
// "at least a_i per part" families).

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tinter/errors.hpp"

#ifndef TINTER_SUBSET_WORDS
#define TINTER_SUBSET_WORDS 2
#endif

namespace tinter {

using ExactCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kSubsetWords = TINTER_SUBSET_WORDS;
inline constexpr int kMaxElements = static_cast<int>(64 * kSubsetWords);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// C(n, k) exactly; 0 when k < 0 or k > n.
ExactCount binom(long long n, long long k);

/// A subset of {1..kMaxElements}. Element e lives at bit e-1, so comparing two
/// subsets as unsigned integers orders them colexicographically.
class Subset {
 public:
  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);
  explicit Subset(std::span<const int> elements);

  static Subset range(int first, int last);  // {first..last}, empty if first > last

  bool contains(int e) const {
    const auto b = static_cast<unsigned>(e - 1);
    return (words_[b / 64] >> (b % 64)) & 1u;
  }
  void insert(int e);
  void erase(int e);

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Largest element, 0 for the empty set.
  int max_element() const;

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < kSubsetWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  int intersection_size(const Subset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < kSubsetWords; ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  Subset& operator&=(const Subset& o) {
    for (std::size_t i = 0; i < kSubsetWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    for (std::size_t i = 0; i < kSubsetWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  Subset& operator-=(const Subset& o) {
    for (std::size_t i = 0; i < kSubsetWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Colexicographic order.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    for (std::size_t i = kSubsetWords; i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Elements in ascending order.
  std::vector<int> elements() const;
  std::string to_string() const;  // "{1,2,5}"

  const std::array<std::uint64_t, kSubsetWords>& words() const { return words_; }
  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kSubsetWords> words_{};
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

/// X = X_1 ∪ ... ∪ X_p laid out part by part over 1..n. Part indices are
/// 0-based in this API; elements are 1-based.
class PartitionedGroundSet {
 public:
  explicit PartitionedGroundSet(std::vector<int> sizes);

  int parts() const { return static_cast<int>(sizes_.size()); }
  int n() const { return n_; }
  /// Ground sets larger than kMaxElements still support the closed-form
  /// bounds; anything that materializes a Subset throws.
  bool fits_subsets() const { return n_ <= kMaxElements; }
  int part_size(int part) const { return sizes_.at(part); }
  const std::vector<int>& sizes() const { return sizes_; }

  /// First element of part `part`.
  int first(int part) const { return offsets_.at(part) + 1; }
  int last(int part) const { return offsets_.at(part) + sizes_.at(part); }
  int part_of(int element) const;

  Subset part_mask(int part) const { return Subset::range(first(part), last(part)); }
  /// The first s elements of a part.
  Subset prefix(int part, int s) const;
  Subset all() const { return Subset::range(1, n_); }

  bool contains(const Subset& s) const { return s.max_element() <= n_; }
  /// |S ∩ X_i| for every part.
  std::vector<int> profile_of(const Subset& s) const;

  friend bool operator==(const PartitionedGroundSet& a, const PartitionedGroundSet& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  std::vector<Subset> masks_;
  int n_ = 0;
};

/// Per-part sizes (r_1, ..., r_p).
struct Profile {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  int total() const;
  /// Throws InvalidParameters unless length p and 0 <= r_i <= n_i.
  void validate(const PartitionedGroundSet& ground) const;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Non-empty set of profiles, every coordinate positive.
class ProfileSet {
 public:
  explicit ProfileSet(std::vector<Profile> profiles);

  const std::vector<Profile>& profiles() const { return profiles_; }
  int parts() const { return profiles_.front().size(); }
  /// Maximum of coordinate i over all profiles.
  int b(int part) const { return b_.at(part); }
  int b() const { return b_max_; }
  int c() const { return c_min_; }

  void validate(const PartitionedGroundSet& ground) const;

 private:
  std::vector<Profile> profiles_;
  std::vector<int> b_;
  int b_max_ = 0;
  int c_min_ = 0;
};

/// (t_1, ..., t_p) with sum t.
struct TDistribution {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  int total() const;

  friend auto operator<=>(const TDistribution&, const TDistribution&) = default;
};

/// Every (t_1..t_p) of non-negative integers with sum t, in lexicographically
/// decreasing order ((t,0,..,0) first).
std::vector<TDistribution> all_distributions(int t, int parts);

/// A deduplicated, colex-sorted collection of subsets over one ground set.
class Family {
 public:
  explicit Family(PartitionedGroundSet ground) : ground_(std::move(ground)) {}
  Family(PartitionedGroundSet ground, std::vector<Subset> members);

  const PartitionedGroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Subset& s) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  PartitionedGroundSet ground_;
  std::vector<Subset> members_;
};

/// Every k-subset of {first..first+width-1}, in colex order.
std::vector<Subset> k_subsets(int first, int width, int k);

/// binom(X_1..X_p; r_1..r_p): every F with |F ∩ X_i| = r_i.
Family enumerate_block(const PartitionedGroundSet& ground, const Profile& profile,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Union of the blocks of every profile in the set.
Family enumerate_h2(const PartitionedGroundSet& ground, const ProfileSet& profiles,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// Profiles r with r_i >= a_i, r_i <= n_i and sum k.
std::vector<Profile> h3_profiles(const PartitionedGroundSet& ground, int k, std::span<const int> a);

/// k-subsets meeting each part X_i in at least a_i elements.
Family enumerate_h3(const PartitionedGroundSet& ground, int k, std::span<const int> a,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// Members of `space` containing `center`.
Family trivial_star(const Family& space, const Subset& center);

/// prod C(n_i - t_i, r_i - t_i).
ExactCount star_size(const PartitionedGroundSet& ground, const Profile& profile,
                     const TDistribution& tdist);

/// prod C(n_i, r_i).
ExactCount block_size(const PartitionedGroundSet& ground, const Profile& profile);

}  // namespace tinter
