#include "tinter/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tinter {

namespace {

// C(n, k) for n < 63 fits in 64 bits.
constexpr int kPascalRows = 63;

const std::vector<std::vector<std::uint64_t>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> rows(kPascalRows);
    for (int n = 0; n < kPascalRows; ++n) {
      rows[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

void check_element(int e) {
  if (e < 1 || e > kMaxElements)
    throw InvalidParameters("element " + std::to_string(e) + " outside 1.." +
                            std::to_string(kMaxElements));
}

}  // namespace

ExactCount binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kPascalRows) return pascal()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  k = std::min(k, n - k);
  ExactCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// ---------------------------------------------------------------- Subset

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

Subset::Subset(std::span<const int> elements) {
  for (int e : elements) insert(e);
}

Subset Subset::range(int first, int last) {
  Subset s;
  for (int e = first; e <= last; ++e) s.insert(e);
  return s;
}

void Subset::insert(int e) {
  check_element(e);
  const auto b = static_cast<unsigned>(e - 1);
  words_[b / 64] |= std::uint64_t{1} << (b % 64);
}

void Subset::erase(int e) {
  check_element(e);
  const auto b = static_cast<unsigned>(e - 1);
  words_[b / 64] &= ~(std::uint64_t{1} << (b % 64));
}

int Subset::max_element() const {
  for (std::size_t i = kSubsetWords; i-- > 0;)
    if (words_[i]) return static_cast<int>(64 * i) + 64 - std::countl_zero(words_[i]);
  return 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < kSubsetWords; ++i) {
    for (auto w = words_[i]; w; w &= w - 1)
      out.push_back(static_cast<int>(64 * i) + std::countr_zero(w) + 1);
  }
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t Subset::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------- ground set

PartitionedGroundSet::PartitionedGroundSet(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidParameters("ground set needs at least one part");
  offsets_.reserve(sizes_.size());
  for (int s : sizes_) {
    if (s < 1) throw InvalidParameters("part sizes must be positive");
    offsets_.push_back(n_);
    n_ += s;
  }
  if (fits_subsets())
    for (int i = 0; i < parts(); ++i) masks_.push_back(Subset::range(first(i), last(i)));
}

int PartitionedGroundSet::part_of(int element) const {
  if (element < 1 || element > n_)
    throw InvalidParameters("element " + std::to_string(element) + " not in ground set");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), element - 1);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Subset PartitionedGroundSet::prefix(int part, int s) const {
  if (s < 0 || s > part_size(part)) throw InvalidParameters("prefix length out of range");
  return Subset::range(first(part), first(part) + s - 1);
}

std::vector<int> PartitionedGroundSet::profile_of(const Subset& s) const {
  std::vector<int> out(sizes_.size());
  if (!fits_subsets())
    throw InvalidParameters("ground set has more than " + std::to_string(kMaxElements) +
                            " elements; rebuild with a larger TINTER_SUBSET_WORDS");
  for (std::size_t i = 0; i < sizes_.size(); ++i) out[i] = s.intersection_size(masks_[i]);
  return out;
}

// ---------------------------------------------------------------- profiles

int Profile::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

void Profile::validate(const PartitionedGroundSet& ground) const {
  if (size() != ground.parts())
    throw InvalidParameters("profile length " + std::to_string(size()) + " does not match p = " +
                            std::to_string(ground.parts()));
  for (int i = 0; i < size(); ++i)
    if ((*this)[i] < 0 || (*this)[i] > ground.part_size(i))
      throw InvalidParameters("profile entry " + std::to_string((*this)[i]) + " out of range for part " +
                              std::to_string(i + 1));
}

ProfileSet::ProfileSet(std::vector<Profile> profiles) : profiles_(std::move(profiles)) {
  if (profiles_.empty()) throw InvalidParameters("profile set must be non-empty");
  std::sort(profiles_.begin(), profiles_.end());
  profiles_.erase(std::unique(profiles_.begin(), profiles_.end()), profiles_.end());
  const int p = profiles_.front().size();
  b_.assign(static_cast<std::size_t>(p), 0);
  c_min_ = profiles_.front().entries.empty() ? 0 : profiles_.front()[0];
  for (const auto& r : profiles_) {
    if (r.size() != p) throw InvalidParameters("profiles have differing lengths");
    for (int i = 0; i < p; ++i) {
      if (r[i] < 1) throw InvalidParameters("profile entries must be positive");
      b_[i] = std::max(b_[i], r[i]);
      c_min_ = std::min(c_min_, r[i]);
    }
  }
  b_max_ = *std::max_element(b_.begin(), b_.end());
}

void ProfileSet::validate(const PartitionedGroundSet& ground) const {
  for (const auto& r : profiles_) r.validate(ground);
}

int TDistribution::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::vector<TDistribution> all_distributions(int t, int parts) {
  if (t < 0 || parts < 1) throw InvalidParameters("need t >= 0 and at least one part");
  std::vector<TDistribution> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(TDistribution{cur});
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, t);
  return out;
}

// ---------------------------------------------------------------- families

Family::Family(PartitionedGroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  for (const auto& m : members_)
    if (!ground_.contains(m)) throw InvalidParameters("member " + m.to_string() + " outside ground set");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<Subset> k_subsets(int first, int width, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > width) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  // Colex successor: bump the lowest position that can move, reset those below.
  while (true) {
    Subset s;
    for (int i : idx) s.insert(first + i);
    out.push_back(s);
    int j = 0;
    while (j < k && (j + 1 < k ? idx[j] + 1 == idx[j + 1] : idx[j] + 1 == width)) ++j;
    if (j == k) break;
    ++idx[j];
    for (int i = 0; i < j; ++i) idx[i] = i;
  }
  return out;
}

namespace {

void check_cap(const ExactCount& size, std::uint64_t cap, const char* what) {
  if (size > cap) {
    std::ostringstream os;
    os << what << " has " << size << " members, above the enumeration cap " << cap;
    throw InstanceTooLarge(os.str());
  }
}

void append_block(const PartitionedGroundSet& ground, const Profile& profile, std::vector<Subset>& out) {
  std::vector<std::vector<Subset>> per_part;
  for (int i = 0; i < ground.parts(); ++i)
    per_part.push_back(k_subsets(ground.first(i), ground.part_size(i), profile[i]));
  std::vector<std::size_t> pos(per_part.size(), 0);
  while (true) {
    Subset s;
    for (std::size_t i = 0; i < per_part.size(); ++i) s |= per_part[i][pos[i]];
    out.push_back(s);
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == per_part[i].size()) pos[i++] = 0;
    if (i == pos.size()) break;
  }
}

}  // namespace

ExactCount block_size(const PartitionedGroundSet& ground, const Profile& profile) {
  profile.validate(ground);
  ExactCount r = 1;
  for (int i = 0; i < ground.parts(); ++i) r *= binom(ground.part_size(i), profile[i]);
  return r;
}

Family enumerate_block(const PartitionedGroundSet& ground, const Profile& profile, std::uint64_t cap) {
  check_cap(block_size(ground, profile), cap, "block");
  std::vector<Subset> members;
  append_block(ground, profile, members);
  return Family(ground, std::move(members));
}

Family enumerate_h2(const PartitionedGroundSet& ground, const ProfileSet& profiles, std::uint64_t cap) {
  profiles.validate(ground);
  ExactCount total = 0;
  for (const auto& r : profiles.profiles()) total += block_size(ground, r);
  check_cap(total, cap, "H2");
  std::vector<Subset> members;
  for (const auto& r : profiles.profiles()) append_block(ground, r, members);
  return Family(ground, std::move(members));
}

std::vector<Profile> h3_profiles(const PartitionedGroundSet& ground, int k, std::span<const int> a) {
  const int p = ground.parts();
  if (static_cast<int>(a.size()) != p) throw InvalidParameters("a-vector length does not match p");
  if (k < 0 || k > ground.n()) throw InvalidParameters("k out of range");
  int sum_a = 0;
  for (int i = 0; i < p; ++i) {
    if (a[i] < 0 || a[i] >= ground.part_size(i)) throw InvalidParameters("need 0 <= a_i < n_i");
    sum_a += a[i];
  }
  if (sum_a > k) throw InvalidParameters("sum of a_i exceeds k");

  std::vector<Profile> out;
  std::vector<int> cur(static_cast<std::size_t>(p));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == p) {
      if (left == 0) out.push_back(Profile{cur});
      return;
    }
    for (int r = a[i]; r <= std::min(left, ground.part_size(i)); ++r) {
      cur[i] = r;
      self(self, i + 1, left - r);
    }
  };
  rec(rec, 0, k);
  return out;
}

Family enumerate_h3(const PartitionedGroundSet& ground, int k, std::span<const int> a, std::uint64_t cap) {
  const auto profiles = h3_profiles(ground, k, a);
  ExactCount total = 0;
  for (const auto& r : profiles) total += block_size(ground, r);
  check_cap(total, cap, "H3");
  std::vector<Subset> members;
  for (const auto& r : profiles) append_block(ground, r, members);
  return Family(ground, std::move(members));
}

Family trivial_star(const Family& space, const Subset& center) {
  if (!space.ground().contains(center)) throw InvalidParameters("star center outside ground set");
  std::vector<Subset> members;
  for (const auto& f : space)
    if (center.is_subset_of(f)) members.push_back(f);
  return Family(space.ground(), std::move(members));
}

ExactCount star_size(const PartitionedGroundSet& ground, const Profile& profile, const TDistribution& tdist) {
  profile.validate(ground);
  if (tdist.size() != ground.parts()) throw InvalidParameters("t-distribution length does not match p");
  ExactCount r = 1;
  for (int i = 0; i < ground.parts(); ++i) {
    if (tdist[i] < 0 || tdist[i] > profile[i])
      throw InvalidParameters("need 0 <= t_i <= r_i in every part");
    r *= binom(ground.part_size(i) - tdist[i], profile[i] - tdist[i]);
  }
  return r;
}

}  // namespace tinter
