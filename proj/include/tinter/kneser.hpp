#pragma once

// Direct (tensor) products of Kneser graphs KG(g, h): vertices are tuples of
// h_i-subsets of [g_i], adjacent iff disjoint in every coordinate.

#include <cstdint>
#include <utility>
#include <vector>

#include "tinter/core.hpp"

namespace tinter {

class KneserParams {
 public:
  /// Each (g, h) must satisfy g >= 2h >= 2.
  explicit KneserParams(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int factors() const { return static_cast<int>(pairs_.size()); }
  /// g_i > 2 h_i for every factor.
  bool strict() const;
  ExactCount vertex_count() const;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

using KneserVertex = std::vector<Subset>;

bool product_adjacent(const KneserVertex& u, const KneserVertex& v, const KneserParams& params);

/// The whole vertex set. Coordinates vary fastest in the first factor; each
/// factor's subsets are listed in colex order.
class KneserProduct {
 public:
  explicit KneserProduct(KneserParams params, std::uint64_t cap = 100'000);

  const KneserParams& params() const { return params_; }
  std::size_t size() const { return size_; }
  KneserVertex vertex(std::size_t index) const;
  std::size_t index_of(const KneserVertex& v) const;
  std::vector<std::size_t> neighbors(std::size_t index) const;

 private:
  KneserParams params_;
  std::vector<std::vector<Subset>> coords_;
  std::vector<std::vector<std::vector<std::size_t>>> disjoint_;  // per factor: subset -> disjoint subsets
  std::vector<std::size_t> radix_;
  std::size_t size_ = 0;
};

/// Breadth-first reachability from vertex 0.
bool is_connected(const KneserParams& params, std::uint64_t cap = 100'000);

/// Number of connected components.
std::size_t component_count(const KneserParams& params, std::uint64_t cap = 100'000);

/// Shortest u-v walk. Throws NoWalk when v is unreachable from u.
std::vector<KneserVertex> find_walk(const KneserParams& params, const KneserVertex& u, const KneserVertex& v,
                                    std::uint64_t cap = 100'000);

}  // namespace tinter
