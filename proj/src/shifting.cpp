#include "tinter/shifting.hpp"

namespace tinter {

namespace {

void check_pair(const PartitionedGroundSet& ground, int i, int j) {
  if (i == j) throw InvalidParameters("shift needs distinct elements");
  if (i < 1 || i > ground.n() || j < 1 || j > ground.n())
    throw InvalidParameters("shift element out of range");
}

Family shift_unchecked(const Family& fam, int i, int j, bool& changed) {
  std::vector<Subset> out;
  out.reserve(fam.size());
  changed = false;
  for (const auto& f : fam) {
    const Subset g = delta_ij(f, i, j);
    if (g != f && !fam.contains(g)) {
      out.push_back(g);
      changed = true;
    } else {
      out.push_back(f);
    }
  }
  return changed ? Family(fam.ground(), std::move(out)) : fam;
}

// One pass of the lexicographic sweep; returns after the first productive pair.
bool sweep_part(Family& fam, int part, std::size_t& steps) {
  const auto& g = fam.ground();
  for (int i = g.first(part); i <= g.last(part); ++i) {
    for (int j = i + 1; j <= g.last(part); ++j) {
      bool changed = false;
      Family next = shift_unchecked(fam, i, j, changed);
      if (changed) {
        fam = std::move(next);
        ++steps;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Subset delta_ij(const Subset& f, int i, int j) {
  if (i == j) throw InvalidParameters("shift needs distinct elements");
  if (i < 1 || i > kMaxElements || j < 1 || j > kMaxElements)
    throw InvalidParameters("shift element out of range");
  if (f.contains(j) && !f.contains(i)) {
    Subset g = f;
    g.erase(j);
    g.insert(i);
    return g;
  }
  return f;
}

Family shift_family(const Family& fam, int i, int j) {
  check_pair(fam.ground(), i, j);
  bool changed = false;
  return shift_unchecked(fam, i, j, changed);
}

ShiftResult l_shift_closure(const Family& fam, int part) {
  if (part < 0 || part >= fam.ground().parts()) throw InvalidParameters("part index out of range");
  ShiftResult r{fam, 0};
  while (sweep_part(r.family, part, r.steps)) {
  }
  return r;
}

ShiftResult full_shift_closure(const Family& fam) {
  ShiftResult r{fam, 0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int l = 0; l < fam.ground().parts(); ++l) {
      auto step = l_shift_closure(r.family, l);
      if (step.steps) {
        changed = true;
        r.steps += step.steps;
        r.family = std::move(step.family);
      }
    }
  }
  return r;
}

bool is_l_shifted(const Family& fam, int part) {
  const auto& g = fam.ground();
  if (part < 0 || part >= g.parts()) throw InvalidParameters("part index out of range");
  for (int i = g.first(part); i <= g.last(part); ++i)
    for (int j = i + 1; j <= g.last(part); ++j)
      for (const auto& f : fam) {
        const Subset d = delta_ij(f, i, j);
        if (d != f && !fam.contains(d)) return false;
      }
  return true;
}

bool is_fully_shifted(const Family& fam) {
  for (int l = 0; l < fam.ground().parts(); ++l)
    if (!is_l_shifted(fam, l)) return false;
  return true;
}

std::size_t shift_potential(const Family& fam) {
  std::size_t s = 0;
  for (const auto& f : fam)
    for (int x : f.elements()) s += static_cast<std::size_t>(x);
  return s;
}

ShiftedPair cross_shift_closure(const Family& a, const Family& b) {
  if (!(a.ground() == b.ground())) throw InvalidParameters("families live on different ground sets");
  ShiftedPair r{a, b, 0};
  const auto& g = a.ground();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int l = 0; l < g.parts() && !changed; ++l) {
      for (int i = g.first(l); i <= g.last(l) && !changed; ++i) {
        for (int j = i + 1; j <= g.last(l) && !changed; ++j) {
          bool ca = false;
          bool cb = false;
          Family na = shift_unchecked(r.a, i, j, ca);
          Family nb = shift_unchecked(r.b, i, j, cb);
          if (ca || cb) {
            r.a = std::move(na);
            r.b = std::move(nb);
            ++r.steps;
            changed = true;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace tinter
