#include "tinter/kneser.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tinter {

KneserParams::KneserParams(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InvalidParameters("Kneser product needs at least one factor");
  for (auto [g, h] : pairs_) {
    if (h < 1 || g < 2 * h) throw InvalidParameters("each Kneser factor needs g >= 2h >= 2");
    if (g > kMaxElements) throw InvalidParameters("Kneser factor too large");
  }
}

bool KneserParams::strict() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](auto gh) { return gh.first > 2 * gh.second; });
}

ExactCount KneserParams::vertex_count() const {
  ExactCount c = 1;
  for (auto [g, h] : pairs_) c *= binom(g, h);
  return c;
}

bool product_adjacent(const KneserVertex& u, const KneserVertex& v, const KneserParams& params) {
  if (static_cast<int>(u.size()) != params.factors() || static_cast<int>(v.size()) != params.factors())
    throw InvalidParameters("vertex dimension does not match the number of factors");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].intersection_size(v[i]) != 0) return false;
  return true;
}

KneserProduct::KneserProduct(KneserParams params, std::uint64_t cap) : params_(std::move(params)) {
  const ExactCount count = params_.vertex_count();
  if (count > cap) {
    std::ostringstream os;
    os << "Kneser product has " << count << " vertices, above the cap " << cap;
    throw InstanceTooLarge(os.str());
  }
  size_ = static_cast<std::size_t>(count);
  std::size_t radix = 1;
  for (auto [g, h] : params_.pairs()) {
    auto subsets = k_subsets(1, g, h);
    std::vector<std::vector<std::size_t>> dis(subsets.size());
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = 0; b < subsets.size(); ++b)
        if (subsets[a].intersection_size(subsets[b]) == 0) dis[a].push_back(b);
    radix_.push_back(radix);
    radix *= subsets.size();
    coords_.push_back(std::move(subsets));
    disjoint_.push_back(std::move(dis));
  }
}

KneserVertex KneserProduct::vertex(std::size_t index) const {
  KneserVertex v;
  for (const auto& c : coords_) {
    v.push_back(c[index % c.size()]);
    index /= c.size();
  }
  return v;
}

std::size_t KneserProduct::index_of(const KneserVertex& v) const {
  if (v.size() != coords_.size()) throw InvalidParameters("vertex dimension does not match the number of factors");
  std::size_t index = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    auto it = std::lower_bound(coords_[i].begin(), coords_[i].end(), v[i]);
    if (it == coords_[i].end() || *it != v[i]) throw InvalidParameters("not a vertex: " + v[i].to_string());
    index += radix_[i] * static_cast<std::size_t>(it - coords_[i].begin());
  }
  return index;
}

std::vector<std::size_t> KneserProduct::neighbors(std::size_t index) const {
  std::vector<std::size_t> out{0};
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto& dis = disjoint_[i][index % coords_[i].size()];
    index /= coords_[i].size();
    std::vector<std::size_t> next;
    next.reserve(out.size() * dis.size());
    for (auto base : out)
      for (auto d : dis) next.push_back(base + radix_[i] * d);
    out = std::move(next);
  }
  return out;
}

namespace {

std::vector<std::size_t> bfs_parents(const KneserProduct& graph, std::size_t start) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(graph.size(), unseen);
  parent[start] = start;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : graph.neighbors(x))
      if (parent[y] == unseen) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  return parent;
}

}  // namespace

bool is_connected(const KneserParams& params, std::uint64_t cap) {
  const KneserProduct graph(params, cap);
  const auto parent = bfs_parents(graph, 0);
  return std::none_of(parent.begin(), parent.end(), [](auto p) { return p == static_cast<std::size_t>(-1); });
}

std::size_t component_count(const KneserParams& params, std::uint64_t cap) {
  const KneserProduct graph(params, cap);
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(graph.size(), unseen);
  std::size_t components = 0;
  for (std::size_t s = 0; s < graph.size(); ++s) {
    if (label[s] != unseen) continue;
    label[s] = components;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : graph.neighbors(x))
        if (label[y] == unseen) {
          label[y] = components;
          queue.push_back(y);
        }
    }
    ++components;
  }
  return components;
}

std::vector<KneserVertex> find_walk(const KneserParams& params, const KneserVertex& u, const KneserVertex& v,
                                    std::uint64_t cap) {
  const KneserProduct graph(params, cap);
  const auto from = graph.index_of(u);
  const auto to = graph.index_of(v);
  const auto parent = bfs_parents(graph, from);
  if (parent[to] == static_cast<std::size_t>(-1)) throw NoWalk("vertices lie in different components");
  std::vector<KneserVertex> walk;
  for (auto x = to; x != from; x = parent[x]) walk.push_back(graph.vertex(x));
  walk.push_back(graph.vertex(from));
  std::reverse(walk.begin(), walk.end());
  return walk;
}

}  // namespace tinter
