#include "sparsity/orders.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>

#include "bitset64.hpp"
#include "sparsity/error.hpp"

namespace sparsity {

using detail::bit;
using detail::lowest;
using detail::Mask;

VertexOrder::VertexOrder(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  rank_.assign(perm_.size(), kNoVertex);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    Vertex v = perm_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= perm_.size() || rank_[v] != kNoVertex)
      throw Error(ErrorCode::Validation, "vertex order is not a permutation of 0..n-1");
    rank_[v] = static_cast<Vertex>(i);
  }
}

VertexOrder VertexOrder::identity(Vertex n) { return VertexOrder(VertexSet::range(n).members()); }

Vertex VertexOrder::min_of(const VertexSet& s) const {
  if (s.empty()) throw Error(ErrorCode::Input, "minimum of an empty set");
  return *std::min_element(s.begin(), s.end(), [&](Vertex a, Vertex b) { return less(a, b); });
}

std::size_t WReachTable::max_size() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return best;
}

static void require_order(const Graph& g, const VertexOrder& order) {
  if (order.size() != g.size())
    throw Error(ErrorCode::Input, "vertex order covers " + std::to_string(order.size()) +
                                      " vertices but the graph has " + std::to_string(g.size()));
}

// u is weakly r-reachable from v iff v is within distance r of u in the
// subgraph induced by u and the vertices above u. One bounded search per u.
template <typename Visit>
static void for_each_wreach_pair(const Graph& g, const VertexOrder& order, int r, Visit&& visit) {
  require_order(g, order);
  if (r < 0) throw Error(ErrorCode::Input, "radius must be non-negative");
  const Vertex n = g.size();
  std::vector<char> above(static_cast<std::size_t>(n), 1);
  Bfs bfs(g);
  for (Vertex pos = 0; pos < n; ++pos) {
    Vertex u = order.at(pos);
    above[u] = 0;
    for (Vertex v : bfs.run(u, r, above)) visit(u, v);
  }
}

WReachTable wreach_table(const Graph& g, const VertexOrder& order, int r) {
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(g.size()));
  for_each_wreach_pair(g, order, r, [&](Vertex u, Vertex v) { sets[v].push_back(u); });
  WReachTable t{r, order, {}};
  t.sets.reserve(sets.size());
  for (auto& s : sets) t.sets.emplace_back(std::move(s));
  return t;
}

std::vector<int> wreach_sizes(const Graph& g, const VertexOrder& order, int r) {
  std::vector<int> sizes(static_cast<std::size_t>(g.size()), 0);
  for_each_wreach_pair(g, order, r, [&](Vertex, Vertex v) { ++sizes[v]; });
  return sizes;
}

int wcol_of_order(const Graph& g, const VertexOrder& order, int r) {
  auto sizes = wreach_sizes(g, order, r);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

// ------------------------------------------------------------- heuristics

OrderResult coloring_number(const Graph& g) {
  const Vertex n = g.size();
  std::vector<Vertex> degree(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> removal;
  removal.reserve(static_cast<std::size_t>(n));
  Vertex degeneracy = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    degeneracy = std::max(degeneracy, d);
    removed[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return {n == 0 ? 0 : degeneracy + 1, VertexOrder(std::move(removal))};
}

// Fills positions from the back. A candidate's cost is the worst exact
// WReach count among already placed (larger) vertices once it is placed
// below them; ties go to the candidate touching fewer placed vertices, then
// the smaller id.
static VertexOrder greedy_wreach_order(const Graph& g, int r) {
  const Vertex n = g.size();
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<int> local_score(static_cast<std::size_t>(n), 1);
  std::vector<int> touched(static_cast<std::size_t>(n), 0);
  std::vector<char> dirty(static_cast<std::size_t>(n), 1);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  Bfs bfs(g);
  Bfs near(g);
  int current_max = 0;

  auto evaluate = [&](Vertex c) {
    int worst = 1;
    int hits = 0;
    for (Vertex p : bfs.run(c, r, placed)) {
      if (p == c) continue;
      worst = std::max(worst, count[p] + 1);
      ++hits;
    }
    local_score[c] = worst;
    touched[c] = hits;
    dirty[c] = 0;
  };

  for (Vertex pos = n - 1; pos >= 0; --pos) {
    Vertex best = kNoVertex;
    for (Vertex c = 0; c < n; ++c) {
      if (placed[c]) continue;
      if (dirty[c]) evaluate(c);
      if (best == kNoVertex) {
        best = c;
        continue;
      }
      int sc = std::max(current_max, local_score[c]);
      int sb = std::max(current_max, local_score[best]);
      if (sc < sb || (sc == sb && touched[c] < touched[best])) best = c;
    }
    for (Vertex p : bfs.run(best, r, placed))
      if (p != best) ++count[p];
    count[best] = 1;
    placed[best] = 1;
    current_max = std::max(current_max, local_score[best]);
    perm[pos] = best;
    // Scores can only change for candidates within 2r of the new vertex.
    for (Vertex c : near.run(best, 2 * r)) dirty[c] = 1;
  }
  return VertexOrder(std::move(perm));
}

OrderResult wcol_heuristic(const Graph& g, int r, OrderHeuristic strategy) {
  if (r < 0) throw Error(ErrorCode::Input, "radius must be non-negative");
  VertexOrder order = strategy == OrderHeuristic::Degeneracy ? coloring_number(g).order
                                                             : greedy_wreach_order(g, r);
  int value = wcol_of_order(g, order, r);
  return {value, std::move(order)};
}

VertexOrder dfs_order(const Graph& g) {
  const Vertex n = g.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    perm.push_back(root);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto nb = g.neighbors(v);
      if (next == nb.size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = nb[next++];
      if (seen[w]) continue;
      seen[w] = 1;
      perm.push_back(w);
      stack.emplace_back(w, 0);
    }
  }
  return VertexOrder(std::move(perm));
}

// ----------------------------------------------------------- exact wcol

namespace {

class WcolSearch {
 public:
  WcolSearch(const Graph& g, int r, OrderResult incumbent)
      : r_(r), n_(g.size()), nbr_(detail::neighbor_masks(g)), best_(std::move(incumbent)) {}

  OrderResult run() {
    std::vector<int> counts(static_cast<std::size_t>(n_), 0);
    Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    descend(all, counts, 0);
    return best_;
  }

 private:
  // counts[v] = number of placed vertices weakly reachable from unplaced v.
  void descend(Mask unplaced, const std::vector<int>& counts, int placed_max) {
    if (!unplaced) {
      best_.value = placed_max;
      best_.order = VertexOrder(prefix_);
      return;
    }
    std::vector<Vertex> candidates;
    for (Mask m = unplaced; m; m &= m - 1) candidates.push_back(lowest(m));
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return counts[a] < counts[b]; });
    std::vector<int> next(counts);
    for (Vertex u : candidates) {
      int final_size = counts[u] + 1;
      int bound = std::max(placed_max, final_size);
      if (bound >= best_.value) continue;
      Mask rest = unplaced & ~bit(u);
      // Vertices reaching u through internal vertices that are all above u.
      Mask seen = bit(u);
      Mask frontier = seen;
      for (int d = 0; d < r_ && frontier; ++d) {
        Mask step = 0;
        for (Mask f = frontier; f; f &= f - 1) step |= nbr_[lowest(f)];
        step &= rest & ~seen;
        seen |= step;
        frontier = step;
      }
      std::copy(counts.begin(), counts.end(), next.begin());
      for (Mask m = seen & ~bit(u); m; m &= m - 1) {
        Vertex v = lowest(m);
        bound = std::max(bound, ++next[v] + 1);
      }
      for (Mask m = rest; m; m &= m - 1) bound = std::max(bound, next[lowest(m)] + 1);
      if (bound >= best_.value) continue;
      prefix_.push_back(u);
      descend(rest, next, std::max(placed_max, final_size));
      prefix_.pop_back();
    }
  }

  int r_;
  Vertex n_;
  std::vector<Mask> nbr_;
  OrderResult best_;
  std::vector<Vertex> prefix_;
};

}  // namespace

OrderResult wcol_exact(const Graph& g, int r, Vertex max_vertices) {
  if (r < 0) throw Error(ErrorCode::Input, "radius must be non-negative");
  if (g.size() > max_vertices) throw_cap_exceeded("wcol_exact", g.size(), max_vertices);
  if (g.size() > 64) throw_cap_exceeded("wcol_exact", g.size(), 64);
  if (g.size() == 0) return {0, VertexOrder()};
  OrderResult a = wcol_heuristic(g, r, OrderHeuristic::Degeneracy);
  OrderResult b = wcol_heuristic(g, r, OrderHeuristic::GreedyWReach);
  OrderResult incumbent = b.value < a.value ? b : a;
  return WcolSearch(g, r, std::move(incumbent)).run();
}

// --------------------------------------------------------------- treedepth

int EliminationForest::depth() const {
  int best = 0;
  const std::size_t n = parent.size();
  for (std::size_t v = 0; v < n; ++v) {
    int d = 0;
    for (Vertex x = static_cast<Vertex>(v); x != kNoVertex && d <= static_cast<int>(n); x = parent[x]) ++d;
    best = std::max(best, d);
  }
  return best;
}

VertexOrder EliminationForest::topological_order() const {
  const Vertex n = static_cast<Vertex>(parent.size());
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;
  for (Vertex v = n - 1; v >= 0; --v) {
    if (parent[v] == kNoVertex) stack.push_back(v);
    else children[parent[v]].push_back(v);
  }
  std::vector<Vertex> perm;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    perm.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
  }
  return VertexOrder(std::move(perm));
}

bool EliminationForest::is_elimination_forest_of(const Graph& g) const {
  const Vertex n = g.size();
  if (parent.size() != static_cast<std::size_t>(n)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] != kNoVertex && (parent[v] < 0 || parent[v] >= n)) return false;
    int steps = 0;
    for (Vertex x = v; x != kNoVertex; x = parent[x])
      if (++steps > n) return false;  // cycle
  }
  auto is_ancestor = [&](Vertex a, Vertex d) {
    for (Vertex x = parent[d]; x != kNoVertex; x = parent[x])
      if (x == a) return true;
    return false;
  };
  for (auto [u, v] : g.edges())
    if (!is_ancestor(u, v) && !is_ancestor(v, u)) return false;
  return true;
}

namespace {

class TreedepthSearch {
 public:
  explicit TreedepthSearch(const Graph& g) : nbr_(detail::neighbor_masks(g)) {}

  int forest(Mask s) {
    int best = 0;
    while (s) {
      Mask comp = detail::reach(nbr_, s, bit(lowest(s)));
      best = std::max(best, connected(comp));
      s &= ~comp;
    }
    return best;
  }

  void build(Mask s, Vertex parent, std::vector<Vertex>& parents) {
    while (s) {
      Mask comp = detail::reach(nbr_, s, bit(lowest(s)));
      connected(comp);
      Vertex root = memo_.at(comp).second;
      parents[root] = parent;
      build(comp & ~bit(root), root, parents);
      s &= ~comp;
    }
  }

 private:
  int connected(Mask s) {
    if (detail::popcount(s) == 1) {
      memo_.emplace(s, std::pair<int, Vertex>{1, lowest(s)});
      return 1;
    }
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.first;
    int best = std::numeric_limits<int>::max();
    Vertex arg = kNoVertex;
    for (Mask m = s; m; m &= m - 1) {
      Vertex v = lowest(m);
      int value = 1 + forest(s & ~bit(v));
      if (value < best) {
        best = value;
        arg = v;
      }
      if (best == 2) break;  // a connected graph with >= 2 vertices has td >= 2
    }
    memo_.emplace(s, std::pair<int, Vertex>{best, arg});
    return best;
  }

  std::vector<Mask> nbr_;
  std::unordered_map<Mask, std::pair<int, Vertex>> memo_;
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, Vertex max_vertices) {
  if (g.size() > max_vertices) throw_cap_exceeded("treedepth_exact", g.size(), max_vertices);
  if (g.size() > 64) throw_cap_exceeded("treedepth_exact", g.size(), 64);
  TreedepthResult out;
  out.forest.parent.assign(static_cast<std::size_t>(g.size()), kNoVertex);
  if (g.size() == 0) return out;
  Mask all = g.size() == 64 ? ~Mask{0} : (bit(g.size()) - 1);
  TreedepthSearch search(g);
  out.value = search.forest(all);
  search.build(all, kNoVertex, out.forest.parent);
  return out;
}

// -------------------------------------------------------------- separation

bool check_separation(const Graph& g, const VertexOrder& order, int r, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(ErrorCode::Precondition, "check_separation requires u != v");
  auto table = wreach_table(g, order, r);
  if (table.sets[v].contains(u))
    throw Error(ErrorCode::Precondition, "check_separation requires u outside WReach_r[v]");
  const VertexSet common = table.sets[v].intersected(table.sets[u]);

  std::vector<char> on_path(static_cast<std::size_t>(g.size()), 0);
  std::vector<Vertex> path{u};
  on_path[u] = 1;
  std::function<bool(Vertex, int)> all_paths_hit = [&](Vertex x, int len) {
    if (x == v) {
      for (Vertex w : path)
        if (common.contains(w)) return true;
      return false;
    }
    if (len == r) return true;
    for (Vertex w : g.neighbors(x)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      bool ok = all_paths_hit(w, len + 1);
      path.pop_back();
      on_path[w] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return all_paths_hit(u, 0);
}

}  // namespace sparsity
