#include "tinter/verify.hpp"

#include "tinter/bounds.hpp"
#include "tinter/shifting.hpp"

namespace tinter {

bool is_t_intersecting(const Family& fam, int t) {
  const auto& m = fam.members();
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = x; y < m.size(); ++y)
      if (m[x].intersection_size(m[y]) < t) return false;
  return true;
}

bool are_cross_t_intersecting(const Family& a, const Family& b, int t) {
  if (a.empty() || b.empty()) throw EmptyFamily("cross t-intersection needs two non-empty families");
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.intersection_size(y) < t) return false;
  return true;
}

std::optional<Subset> is_full_t_star(const Family& fam, const Family& space, int t) {
  if (t < 0) return std::nullopt;
  if (fam.empty()) return std::nullopt;
  Subset common = fam.members().front();
  for (const auto& f : fam) common &= f;
  if (common.size() < t) return std::nullopt;
  // Any valid center is a t-subset of the common intersection.
  const auto elems = common.elements();
  std::vector<int> pick(static_cast<std::size_t>(t));
  std::optional<Subset> found;
  auto rec = [&](auto&& self, std::size_t start, int depth) -> bool {
    if (depth == t) {
      Subset c(std::span<const int>(pick.data(), pick.size()));
      std::size_t count = 0;
      for (const auto& f : space)
        if (c.is_subset_of(f)) {
          if (!fam.contains(f)) return false;
          ++count;
        }
      if (count == fam.size()) {
        found = c;
        return true;
      }
      return false;
    }
    for (std::size_t q = start; q < elems.size(); ++q) {
      pick[depth] = elems[q];
      if (self(self, q + 1, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0, 0);
  return found;
}

namespace {

bool all_have_size(const Family& f, int size) {
  for (const auto& m : f)
    if (m.size() != size) return false;
  return true;
}

bool all_have_profile(const Family& f, const Profile& r) {
  for (const auto& m : f)
    if (f.ground().profile_of(m) != r.entries) return false;
  return true;
}

}  // namespace

bool check_lemma_21ii(const Family& a, const Family& b, int t, int r, int s) {
  const auto& g = a.ground();
  if (!(g == b.ground())) throw PreconditionViolation("families live on different ground sets");
  if (g.parts() != 1) throw PreconditionViolation("single-part ground set required");
  if (!(t <= r && r <= s && s <= g.n())) throw PreconditionViolation("need t <= r <= s <= n");
  if (a.empty() || b.empty()) throw PreconditionViolation("families must be non-empty");
  if (!all_have_size(a, r) || !all_have_size(b, s)) throw PreconditionViolation("member sizes do not match r, s");
  if (!is_l_shifted(a, 0) || !is_l_shifted(b, 0)) throw PreconditionViolation("families must be shifted");
  if (!are_cross_t_intersecting(a, b, t)) throw PreconditionViolation("families are not cross t-intersecting");

  const Subset window = Subset::range(1, std::min(g.n(), r + s - t));
  for (const auto& x : a)
    for (const auto& y : b)
      if ((x & y & window).size() < t) return false;
  return true;
}

bool prefix_sum_inequality_holds(const Family& a, const Family& b, int t, const Profile& ra, const Profile& rb) {
  const auto& g = a.ground();
  ra.validate(g);
  rb.validate(g);
  Subset window;
  for (int i = 0; i < g.parts(); ++i) window |= g.prefix(i, std::min(g.part_size(i), std::max(0, ra[i] + rb[i] - 1)));
  for (const auto& x : a)
    for (const auto& y : b)
      if ((x & y & window).size() < t) return false;
  return true;
}

bool check_lemma_22(const Family& a, const Family& b, int t, const Profile& ra, const Profile& rb) {
  const auto& g = a.ground();
  if (!(g == b.ground())) throw PreconditionViolation("families live on different ground sets");
  try {
    ra.validate(g);
    rb.validate(g);
  } catch (const InvalidParameters& e) {
    throw PreconditionViolation(e.what());
  }
  for (int i = 0; i < g.parts(); ++i)
    if (g.part_size(i) <= ra[i] + rb[i] - 1) throw PreconditionViolation("need n_i > r_i + s_i - 1");
  if (a.empty() || b.empty()) throw PreconditionViolation("families must be non-empty");
  if (!all_have_profile(a, ra) || !all_have_profile(b, rb))
    throw PreconditionViolation("member profiles do not match");
  if (!is_fully_shifted(a) || !is_fully_shifted(b))
    throw PreconditionViolation("families must be l-shifted for every part");
  if (!are_cross_t_intersecting(a, b, t)) throw PreconditionViolation("families are not cross t-intersecting");
  return prefix_sum_inequality_holds(a, b, t, ra, rb);
}

StarLiftingReport check_lemma_24(const Family& fam, const Family& space, const ProfileSet& profiles, int t, int i,
                                 int j) {
  const auto& g = space.ground();
  if (!(g == fam.ground())) throw PreconditionViolation("families live on different ground sets");
  if (i < 1 || j < 1 || i > g.n() || j > g.n() || i == j || g.part_of(i) != g.part_of(j))
    throw PreconditionViolation("i and j must be distinct elements of one part");
  for (const auto& f : fam)
    if (!space.contains(f)) throw PreconditionViolation("family is not inside the space");
  if (!is_t_intersecting(fam, t)) throw PreconditionViolation("family is not t-intersecting");

  StarLiftingReport r;
  r.hypothesis = star_lifting_hypothesis(t, g, profiles);
  r.shifted_is_star = is_full_t_star(shift_family(fam, i, j), space, t).has_value();
  r.original_is_star = is_full_t_star(fam, space, t).has_value();
  r.holds = !r.shifted_is_star || r.original_is_star;
  return r;
}

}  // namespace tinter
