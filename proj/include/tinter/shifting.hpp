#pragma once

// Left-compressions inside a part. Element i < j means j is pushed down to i.

#include <cstddef>
#include <utility>

#include "tinter/core.hpp"

namespace tinter {

/// (F \ {j}) ∪ {i} when j ∈ F and i ∉ F; F otherwise.
Subset delta_ij(const Subset& f, int i, int j);

/// Δ_{i,j}: each member is replaced by its compression unless the compression
/// is already a member. Size preserving.
Family shift_family(const Family& fam, int i, int j);

struct ShiftResult {
  Family family;
  std::size_t steps = 0;  // productive Δ_{i,j} applications
};

/// Apply Δ_{i,j} over pairs i < j of part `part`, sweeping pairs in
/// lexicographic order and restarting after each change, until nothing moves.
ShiftResult l_shift_closure(const Family& fam, int part);

/// Round-robin l-shift closures over every part until a full pass is stable.
ShiftResult full_shift_closure(const Family& fam);

bool is_l_shifted(const Family& fam, int part);
bool is_fully_shifted(const Family& fam);

/// Σ_F Σ_{x∈F} x. Every productive compression lowers it by at least one.
std::size_t shift_potential(const Family& fam);

struct ShiftedPair {
  Family a;
  Family b;
  std::size_t steps = 0;
};

/// Compress two families simultaneously with the same Δ_{i,j} sequence until
/// both are l-shifted for every part. Cross t-intersection is preserved.
ShiftedPair cross_shift_closure(const Family& a, const Family& b);

}  // namespace tinter
