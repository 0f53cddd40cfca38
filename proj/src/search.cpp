#include "tinter/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "tinter/shifting.hpp"
#include "tinter/verify.hpp"

namespace tinter {

namespace {

// ------------------------------------------------------------- bit rows

class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool is_subset_of(const BitRow& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  BitRow& operator&=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitRow& subtract(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  /// Lowest set bit, or npos.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return 64 * i + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (auto w = words_[i]; w; w &= w - 1) f(64 * i + static_cast<std::size_t>(std::countr_zero(w)));
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

// Intersection graph on the members of a space with |A| >= t.
struct IntersectionGraph {
  std::vector<Subset> vertices;
  std::vector<BitRow> adj;  // no self loops
};

IntersectionGraph build_graph(const Family& space, int t, const std::vector<std::size_t>* order = nullptr) {
  IntersectionGraph g;
  if (order) {
    for (auto i : *order) g.vertices.push_back(space.members()[i]);
  } else {
    for (const auto& f : space)
      if (f.size() >= t) g.vertices.push_back(f);
  }
  const std::size_t n = g.vertices.size();
  g.adj.assign(n, BitRow(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.vertices[a].intersection_size(g.vertices[b]) >= t) {
        g.adj[a].set(b);
        g.adj[b].set(a);
      }
  return g;
}

void check_vertex_cap(std::size_t n, std::uint64_t cap) {
  if (n > cap) {
    std::ostringstream os;
    os << "search space has " << n << " members, above the search cap " << cap;
    throw InstanceTooLarge(os.str());
  }
}

// Greedy sequential colouring of `p`. Fills `order` with the vertices of p
// and `colour` with the running colour count, both ascending by colour.
void colour_sort(const IntersectionGraph& g, const BitRow& p, std::vector<std::size_t>& order,
                 std::vector<std::size_t>& colour) {
  order.clear();
  colour.clear();
  BitRow uncoloured = p;
  std::size_t k = 0;
  while (!uncoloured.none()) {
    ++k;
    BitRow q = uncoloured;
    while (!q.none()) {
      const auto v = q.first();
      q.reset(v);
      q.subtract(g.adj[v]);
      uncoloured.reset(v);
      order.push_back(v);
      colour.push_back(k);
    }
  }
}

class CliqueSearch {
 public:
  CliqueSearch(const IntersectionGraph& g, std::uint64_t node_limit) : g_(g), node_limit_(node_limit) {}

  void seed(std::vector<std::size_t> clique) {
    best_size_ = clique.size();
    best_ = std::move(clique);
  }

  void run(unsigned workers) {
    const std::size_t n = g_.vertices.size();
    if (n == 0) return;
    BitRow all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(g_, all, order, colour);

    // Top-level branch q (counted from the highest colour) uses the candidate
    // set of vertices earlier in the colour order.
    std::vector<BitRow> prefix(order.size());
    BitRow running(n);
    for (std::size_t q = 0; q < order.size(); ++q) {
      prefix[q] = running;
      running.set(order[q]);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      std::vector<std::size_t> clique;
      while (true) {
        const std::size_t step = next.fetch_add(1);
        if (step >= order.size()) return;
        const std::size_t q = order.size() - 1 - step;
        if (colour[q] <= best_size_.load()) return;  // colours only shrink from here
        if (stopped()) return;
        const auto v = order[q];
        clique.assign(1, v);
        BitRow p = prefix[q];
        p &= g_.adj[v];
        if (p.none())
          offer(clique);
        else
          expand(clique, p);
      }
    };
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_.load(); }
  bool complete() const { return !limit_hit_.load(); }

 private:
  bool stopped() {
    if (node_limit_ && nodes_.load() >= node_limit_) {
      limit_hit_ = true;
      return true;
    }
    return false;
  }

  void offer(const std::vector<std::size_t>& clique) {
    if (clique.size() <= best_size_.load()) return;
    std::lock_guard lock(mutex_);
    if (clique.size() > best_size_.load()) {
      best_ = clique;
      best_size_ = clique.size();
    }
  }

  void expand(std::vector<std::size_t>& clique, BitRow p) {
    ++nodes_;
    if (stopped()) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(g_, p, order, colour);
    for (std::size_t q = order.size(); q-- > 0;) {
      if (clique.size() + colour[q] <= best_size_.load()) return;
      const auto v = order[q];
      clique.push_back(v);
      BitRow np = p;
      np &= g_.adj[v];
      if (np.none())
        offer(clique);
      else
        expand(clique, std::move(np));
      clique.pop_back();
      p.reset(v);
      if (limit_hit_.load()) return;
    }
  }

  const IntersectionGraph& g_;
  std::uint64_t node_limit_;
  std::atomic<std::size_t> best_size_{0};
  std::vector<std::size_t> best_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> limit_hit_{false};
  std::mutex mutex_;
};

// Descending degree, ties by colex position in the space.
std::vector<std::size_t> degree_order(const Family& space, int t) {
  const auto& m = space.members();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].size() >= t) idx.push_back(i);
  std::vector<std::size_t> degree(m.size(), 0);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (m[idx[a]].intersection_size(m[idx[b]]) >= t) {
        ++degree[idx[a]];
        ++degree[idx[b]];
      }
  std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return degree[x] > degree[y]; });
  return idx;
}

SearchResult finish(const Family& space, int t, std::vector<Subset> members, std::uint64_t nodes,
                    const ExactCount& bound, bool complete) {
  SearchResult r{ExactCount(members.size()), Family(space.ground(), std::move(members)), std::nullopt, nodes,
                 bound, complete};
  r.is_trivial_star = is_full_t_star(r.witness, space, t);
  return r;
}

}  // namespace

Family best_trivial_star(const Family& space, int t) {
  if (t < 0) throw InvalidParameters("need t >= 0");
  std::unordered_map<Subset, std::size_t, SubsetHash> counts;
  for (const auto& f : space) {
    const auto elems = f.elements();
    if (static_cast<int>(elems.size()) < t) continue;
    for (const auto& sub : k_subsets(1, static_cast<int>(elems.size()), t)) {
      Subset c;
      for (int pos : sub.elements()) c.insert(elems[static_cast<std::size_t>(pos - 1)]);
      ++counts[c];
    }
  }
  if (counts.empty()) return Family(space.ground());
  // Largest count, ties to the colex-smallest center.
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second || (it->second == best->second && it->first < best->first)) best = it;
  return trivial_star(space, best->first);
}

SearchResult max_t_intersecting(const Family& space, int t, const SearchOptions& options) {
  if (t < 0) throw InvalidParameters("need t >= 0");
  check_vertex_cap(space.size(), options.vertex_cap);
  const auto order = degree_order(space, t);
  const IntersectionGraph g = build_graph(space, t, &order);

  CliqueSearch search(g, options.node_limit);
  ExactCount bound = 0;
  if (options.seed_with_star && t >= 1) {
    const Family star = best_trivial_star(space, t);
    std::vector<std::size_t> seed;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (star.contains(g.vertices[v])) seed.push_back(v);
    bound = seed.size();
    search.seed(std::move(seed));
  }
  search.run(options.workers);

  std::vector<Subset> members;
  for (auto v : search.best()) members.push_back(g.vertices[v]);
  return finish(space, t, std::move(members), search.nodes(), bound, search.complete());
}

SearchResult brute_force_max(const Family& space, int t, const BruteForceLimits& limits) {
  if (t < 0) throw InvalidParameters("need t >= 0");
  const IntersectionGraph g = build_graph(space, t);
  const std::size_t n = g.vertices.size();
  std::uint64_t nodes = 0;
  std::uint64_t best_mask = 0;

  if (n <= limits.subset_enumeration && n <= 30) {
    // clique[mask] = clique[mask minus lowest bit] and the rest is adjacent to the lowest bit.
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v) g.adj[v].for_each([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> clique(total, false);
    clique[0] = true;
    int best = 0;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      ++nodes;
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::uint64_t rest = mask & (mask - 1);
      clique[mask] = clique[rest] && (rest & ~adj[low]) == 0;
      if (clique[mask] && std::popcount(mask) > best) {
        best = std::popcount(mask);
        best_mask = mask;
      }
    }
  } else if (n <= limits.clique_enumeration && n <= 64) {
    // Bron–Kerbosch with pivoting over all maximal cliques.
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v) g.adj[v].for_each([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });
    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
      ++nodes;
      if (p == 0 && x == 0) {
        if (std::popcount(r) > std::popcount(best_mask)) best_mask = r;
        return;
      }
      const std::uint64_t px = p | x;
      const auto pivot = static_cast<std::size_t>(std::countr_zero(px));
      for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(cand));
        const std::uint64_t bit = std::uint64_t{1} << v;
        self(self, r | bit, p & adj[v], x & adj[v]);
        p &= ~bit;
        x |= bit;
      }
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (n > 0) bk(bk, 0, all, 0);
  } else {
    throw InstanceTooLarge("brute force is limited to " + std::to_string(limits.clique_enumeration) +
                           " members; space has " + std::to_string(n));
  }

  std::vector<Subset> members;
  for (auto m = best_mask; m; m &= m - 1) members.push_back(g.vertices[static_cast<std::size_t>(std::countr_zero(m))]);
  return finish(space, t, std::move(members), nodes, 0, true);
}

namespace {

// Down-set search over the compression order of a shift-closed space.
class ShiftedSearch {
 public:
  ShiftedSearch(const Family& space, int t, std::uint64_t node_limit) : node_limit_(node_limit) {
    g_ = build_graph(space, t);
    const std::size_t n = g_.vertices.size();
    const auto& ground = space.ground();
    std::unordered_map<Subset, std::size_t, SubsetHash> index;
    for (std::size_t v = 0; v < n; ++v) index[g_.vertices[v]] = v;

    // Immediate predecessors: single compressions δ_{i,j}, i < j in one part.
    std::vector<std::vector<std::size_t>> below(n);
    for (std::size_t v = 0; v < n; ++v) {
      const Subset& f = g_.vertices[v];
      for (int j : f.elements()) {
        const int part = ground.part_of(j);
        for (int i = ground.first(part); i < j; ++i) {
          if (f.contains(i)) continue;
          const Subset d = delta_ij(f, i, j);
          auto it = index.find(d);
          if (it == index.end()) throw InvalidParameters("search space is not closed under compressions");
          below[v].push_back(it->second);
        }
      }
    }
    // Transitive closures. Compressions lower the element sum, so sorting by
    // it gives a topological order.
    std::vector<std::size_t> topo(n);
    std::iota(topo.begin(), topo.end(), 0);
    std::vector<std::size_t> weight(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto e = g_.vertices[v].elements();
      weight[v] = static_cast<std::size_t>(std::accumulate(e.begin(), e.end(), 0));
    }
    std::stable_sort(topo.begin(), topo.end(), [&](auto a, auto b) { return weight[a] < weight[b]; });
    down_.assign(n, BitRow(n));
    for (auto v : topo) {
      down_[v].set(v);
      for (auto u : below[v]) down_[v] |= down_[u];
    }
    up_.assign(n, BitRow(n));
    for (std::size_t v = 0; v < n; ++v) down_[v].for_each([&](std::size_t u) { up_[u].set(v); });
  }

  void run() {
    const std::size_t n = g_.vertices.size();
    if (n == 0) return;
    BitRow included(n);
    BitRow candidates(n);
    for (std::size_t v = 0; v < n; ++v) candidates.set(v);
    refine(included, candidates);
    branch(included, candidates, 0);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  const IntersectionGraph& graph() const { return g_; }
  std::uint64_t nodes() const { return nodes_; }
  bool complete() const { return !limit_hit_; }

 private:
  // Drop candidates whose down-set cannot be completed inside included ∪ candidates.
  void refine(const BitRow& included, BitRow& candidates) const {
    BitRow allowed = included;
    allowed |= candidates;
    bool changed = true;
    while (changed) {
      changed = false;
      candidates.for_each([&](std::size_t v) {
        if (!down_[v].is_subset_of(allowed)) {
          candidates.reset(v);
          allowed.reset(v);
          changed = true;
        }
      });
    }
  }

  void branch(BitRow& included, BitRow candidates, std::size_t size) {
    ++nodes_;
    if (node_limit_ && nodes_ >= node_limit_) {
      limit_hit_ = true;
      return;
    }
    if (size > best_size_) {
      best_size_ = size;
      best_.clear();
      included.for_each([&](std::size_t v) { best_.push_back(v); });
    }
    if (candidates.none()) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(g_, candidates, order, colour);
    if (size + colour.back() <= best_size_) return;

    // A minimal candidate: its proper down-set is already included.
    std::size_t v = BitRow::npos;
    candidates.for_each([&](std::size_t u) {
      if (v != BitRow::npos) return;
      BitRow rest = down_[u];
      rest.reset(u);
      if (rest.is_subset_of(included)) v = u;
    });
    if (v == BitRow::npos) return;

    // Include v.
    {
      BitRow next = candidates;
      next &= g_.adj[v];
      included.set(v);
      refine(included, next);
      branch(included, std::move(next), size + 1);
      included.reset(v);
      if (limit_hit_) return;
    }
    // Exclude v and everything above it.
    candidates.subtract(up_[v]);
    refine(included, candidates);
    branch(included, std::move(candidates), size);
  }

  IntersectionGraph g_;
  std::vector<BitRow> down_;
  std::vector<BitRow> up_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool limit_hit_ = false;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

SearchResult shifted_search(const Family& space, int t, const SearchOptions& options) {
  if (t < 0) throw InvalidParameters("need t >= 0");
  check_vertex_cap(space.size(), options.vertex_cap);
  ShiftedSearch search(space, t, options.node_limit);
  search.run();
  std::vector<Subset> members;
  for (auto v : search.best()) members.push_back(search.graph().vertices[v]);
  return finish(space, t, std::move(members), search.nodes(), 0, search.complete());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial:
      return "trivial";
    case Verdict::non_trivial:
      return "non-trivial";
    case Verdict::tie:
      return "tie";
  }
  return "unknown";
}

ConjectureReport check_conjecture_h3(const PartitionedGroundSet& ground, int k, const std::vector<int>& a,
                                     const SearchOptions& options) {
  const Family h3 = enumerate_h3(ground, k, a, options.vertex_cap);
  ConjectureReport r{max_t_intersecting(h3, 1, options), Family(ground), std::nullopt};

  // Largest star over every single-element center.
  std::size_t best = 0;
  for (int x = 1; x <= ground.n(); ++x) {
    Family star = trivial_star(h3, Subset{x});
    if (!r.best_star_center || star.size() > best) {
      best = star.size();
      r.best_star_center = x;
      r.best_star = std::move(star);
    }
  }

  int sum_a = std::accumulate(a.begin(), a.end(), 0);
  r.hypothesis_half = true;
  int size_failures = 0;
  for (int i = 0; i < ground.parts(); ++i) {
    if (ground.part_size(i) < 2 * a[i]) r.hypothesis_half = false;
    if (a[i] > 0 && !(ground.part_size(i) > k - sum_a + a[i])) ++size_failures;
  }
  r.hypothesis_size = size_failures <= 1;

  if (r.search.max_size > ExactCount(best))
    r.verdict = Verdict::non_trivial;
  else if (r.search.is_trivial_star)
    r.verdict = Verdict::trivial;
  else
    r.verdict = Verdict::tie;
  return r;
}

TheoremReport check_theorem_t1(const PartitionedGroundSet& ground, const Profile& k, int t,
                               const SearchOptions& options) {
  const Family block = enumerate_block(ground, k, options.vertex_cap);
  TheoremReport r{max_t_intersecting(block, t, options), g_value(t, ground, k), algorithm1(t, ground, k),
                  theorem_hypotheses(t, ground, k)};
  r.equality = r.search.max_size == r.g;
  r.gap = r.search.max_size - r.g;
  r.witness_is_star = r.search.is_trivial_star.has_value();
  r.center_satisfies_es2 = r.witness_is_star && check_es2(ground, k, t, *r.search.is_trivial_star);
  return r;
}

}  // namespace tinter
