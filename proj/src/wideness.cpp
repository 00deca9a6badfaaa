#include "sparsity/wideness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <map>
#include <tuple>

#include "bitset64.hpp"
#include "sparsity/error.hpp"

namespace sparsity {

double uqw_threshold(int c, std::size_t m) {
  double v = 4.0 * std::pow(2.0 * c * static_cast<double>(m), c);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

namespace {

// The order restricted to the vertices of a subgraph, as a local order.
VertexOrder restrict_order(const VertexOrder& order, const Subgraph& sub) {
  std::vector<Vertex> perm;
  perm.reserve(static_cast<std::size_t>(sub.graph.size()));
  for (Vertex v : order.perm())
    if (sub.to_local[v] != kNoVertex) perm.push_back(sub.to_local[v]);
  return VertexOrder(std::move(perm));
}

// Greedy pick of candidates pairwise at distance > r in `host`.
std::vector<Vertex> far_greedy(const Graph& host, const std::vector<Vertex>& candidates, int r, std::size_t limit) {
  std::vector<char> blocked(static_cast<std::size_t>(host.size()), 0);
  std::vector<Vertex> out;
  Bfs bfs(host);
  for (Vertex v : candidates) {
    if (out.size() >= limit) break;
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex w : bfs.run(v, r)) blocked[w] = 1;
  }
  return out;
}

bool pairwise_far(const Graph& g, const VertexSet& s, const VertexSet& b, int r) {
  Subgraph rest = delete_vertices(g, s);
  Bfs bfs(rest.graph);
  for (Vertex v : b) {
    bfs.run(rest.local(v), r);
    for (Vertex w : b)
      if (w != v && bfs.visited(rest.local(w))) return false;
  }
  return true;
}

UqwCertificate direct_route(const Graph& g, const VertexSet& a, int r, std::size_t limit) {
  UqwCertificate cert;
  cert.method = "direct";
  cert.b = VertexSet(far_greedy(g, a.members(), r, limit));
  return cert;
}

// Moves into S any vertex weakly r-reachable from more than |A|/(2m)
// members of A (at most c times), then picks members of A \ S with pairwise
// disjoint weak-reachability sets in G - S.
UqwCertificate frequent_route(const Graph& g, const VertexSet& a, int r, std::size_t m, const VertexOrder& order,
                              int c, std::size_t limit) {
  UqwCertificate cert;
  cert.method = "frequent";
  const double threshold = static_cast<double>(a.size()) / (2.0 * static_cast<double>(m));
  std::vector<Vertex> s;
  Subgraph rest = delete_vertices(g, VertexSet{});
  WReachTable table = wreach_table(rest.graph, restrict_order(order, rest), r);
  for (int round = 0; round < c; ++round) {
    std::vector<std::size_t> count(static_cast<std::size_t>(rest.graph.size()), 0);
    for (Vertex v : a)
      if (rest.to_local[v] != kNoVertex)
        for (Vertex x : table.sets[rest.local(v)]) ++count[x];
    Vertex best = kNoVertex;
    for (Vertex x = 0; x < rest.graph.size(); ++x) {
      if (static_cast<double>(count[x]) <= threshold) continue;
      if (best == kNoVertex || count[x] > count[best] ||
          (count[x] == count[best] && order.less(rest.to_parent[x], rest.to_parent[best])))
        best = x;
    }
    if (best == kNoVertex) break;
    s.push_back(rest.to_parent[best]);
    rest = delete_vertices(g, VertexSet(s));
    table = wreach_table(rest.graph, restrict_order(order, rest), r);
  }

  std::vector<char> used(static_cast<std::size_t>(rest.graph.size()), 0);
  std::vector<Vertex> b;
  for (Vertex v : a) {
    if (b.size() >= limit) break;
    if (rest.to_local[v] == kNoVertex) continue;
    const VertexSet& w = table.sets[rest.local(v)];
    if (std::any_of(w.begin(), w.end(), [&](Vertex x) { return used[x] != 0; })) continue;
    for (Vertex x : w) used[x] = 1;
    b.push_back(v);
  }
  cert.s = VertexSet(std::move(s));
  cert.b = VertexSet(std::move(b));
  return cert;
}

// Restricts to the members of A whose weak-reachability sets share the most
// frequent element, adds that element to the core, and repeats until m
// members have pairwise disjoint sets outside the core.
UqwCertificate sunflower_route(const Graph& g, const VertexSet& a, int r, std::size_t m, const VertexOrder& order,
                               std::size_t limit) {
  WReachTable table = wreach_table(g, order, r);
  std::vector<Vertex> family = a.members();
  std::vector<char> in_core(static_cast<std::size_t>(g.size()), 0);
  std::vector<Vertex> core;
  UqwCertificate best;
  best.method = "sunflower";
  while (!family.empty()) {
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> petals;
    for (Vertex v : family) {
      if (petals.size() >= limit) break;
      const VertexSet& w = table.sets[v];
      bool clash = false;
      for (Vertex x : w)
        if (!in_core[x] && used[x]) clash = true;
      if (clash) continue;
      for (Vertex x : w)
        if (!in_core[x]) used[x] = 1;
      petals.push_back(v);
    }
    if (petals.size() > best.b.size() || best.b.empty()) {
      best.s = VertexSet(core);
      best.b = VertexSet(petals);
    }
    if (petals.size() >= m) break;

    std::map<Vertex, std::size_t> freq;
    for (Vertex v : family)
      for (Vertex x : table.sets[v])
        if (!in_core[x]) ++freq[x];
    Vertex pick = kNoVertex;
    for (auto [x, f] : freq)
      if (pick == kNoVertex || f > freq[pick] || (f == freq[pick] && order.less(x, pick))) pick = x;
    if (pick == kNoVertex) break;
    in_core[pick] = 1;
    core.push_back(pick);
    std::vector<Vertex> next;
    for (Vertex v : family)
      if (v != pick && table.sets[v].contains(pick)) next.push_back(v);
    family = std::move(next);
  }
  return best;
}

}  // namespace

std::vector<UqwCertificate> uqw_candidates(const Graph& g, const VertexSet& a, int r, std::size_t m,
                                           const VertexOrder& order, UqwOptions options) {
  if (a.empty()) throw Error(ErrorCode::Input, "uqw: the set A must be nonempty");
  if (r < 1) throw Error(ErrorCode::Input, "uqw: r must be at least 1");
  if (m < 1) throw Error(ErrorCode::Input, "uqw: m must be at least 1");
  if (order.size() != g.size()) throw Error(ErrorCode::Input, "uqw: order size does not match the graph");
  for (Vertex v : a) require_vertex(g, v);

  const int c = wcol_of_order(g, order, r);
  const std::size_t limit = options.maximize ? a.size() : m;
  std::vector<UqwCertificate> out;
  out.push_back(direct_route(g, a, r, limit));
  if (out.back().b.size() < m || options.maximize) {
    out.push_back(frequent_route(g, a, r, m, order, c, limit));
    out.push_back(sunflower_route(g, a, r, m, order, limit));
  }
  const bool pre = static_cast<double>(a.size()) >= uqw_threshold(c, m);
  for (auto& cert : out) {
    cert.r = r;
    cert.m = m;
    cert.a = a;
    cert.c = c;
    cert.precondition_met = pre;
    cert.guarantee_met = cert.s.size() <= static_cast<std::size_t>(c) && cert.b.size() >= m;
    if (!pairwise_far(g, cert.s, cert.b, r))
      throw Error(ErrorCode::Internal, "uqw route '" + cert.method + "' produced a set that is not distance-r independent");
  }
  return out;
}

UqwCertificate uqw_extract(const Graph& g, const VertexSet& a, int r, std::size_t m, const VertexOrder& order,
                           UqwOptions options) {
  auto cands = uqw_candidates(g, a, r, m, order, options);
  auto rank = [&](const UqwCertificate& x) {
    return std::make_tuple(x.b.size() >= m ? 0 : 1, x.b.size() >= m ? x.s.size() : 0,
                           -static_cast<long long>(x.b.size()), x.s.size());
  };
  return *std::min_element(cands.begin(), cands.end(),
                           [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
}

namespace {

using detail::Mask;

void max_independent(const std::vector<Mask>& adj, Mask cand, Mask chosen, Mask& best) {
  if (detail::popcount(chosen) + detail::popcount(cand) <= detail::popcount(best)) return;
  if (!cand) {
    best = chosen;
    return;
  }
  Vertex v = detail::lowest(cand);
  max_independent(adj, cand & ~adj[v] & ~detail::bit(v), chosen | detail::bit(v), best);
  max_independent(adj, cand & ~detail::bit(v), chosen, best);
}

}  // namespace

std::optional<UqwCertificate> uqw_brute(const Graph& g, const VertexSet& a, int r, std::size_t m, int s_max,
                                        Vertex max_vertices) {
  if (g.size() > max_vertices) throw_cap_exceeded("uqw_brute", g.size(), max_vertices);
  if (g.size() > 62) throw_cap_exceeded("uqw_brute", g.size(), 62);
  if (r < 1) throw Error(ErrorCode::Input, "uqw: r must be at least 1");
  if (s_max < 0) throw Error(ErrorCode::Input, "uqw: s_max must be non-negative");
  for (Vertex v : a) require_vertex(g, v);
  const Vertex n = g.size();
  s_max = std::min<int>(s_max, n);

  std::optional<UqwCertificate> best;
  std::vector<Vertex> pick;
  auto evaluate = [&]() {
    VertexSet s(pick);
    Subgraph rest = delete_vertices(g, s);
    Bfs bfs(rest.graph);
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    Mask cand = 0;
    for (Vertex v : a) {
      if (s.contains(v)) continue;
      cand |= detail::bit(v);
      for (Vertex w : bfs.run(rest.local(v), r)) {
        Vertex pw = rest.to_parent[w];
        if (pw != v) adj[v] |= detail::bit(pw);
      }
    }
    Mask found = 0;
    max_independent(adj, cand, 0, found);
    if (!best || static_cast<std::size_t>(detail::popcount(found)) > best->b.size()) {
      UqwCertificate cert;
      cert.r = r;
      cert.m = m;
      cert.a = a;
      cert.s = s;
      cert.b = detail::set_of(found);
      cert.method = "exhaustive";
      best = cert;
    }
  };
  // Sizes in increasing order so that ties keep the smaller S.
  for (int size = 0; size <= s_max; ++size) {
    std::function<void(Vertex, int)> exact = [&](Vertex from, int left) {
      if (left == 0) {
        evaluate();
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        pick.push_back(v);
        exact(v + 1, left - 1);
        pick.pop_back();
      }
    };
    exact(0, size);
  }
  if (!best || best->b.size() < m) return std::nullopt;
  best->c = static_cast<int>(best->s.size());
  best->guarantee_met = true;
  return best;
}

double worst_ball_fraction(const Graph& g, const VertexSet& a, const VertexSet& s, int r) {
  if (a.empty()) return 0.0;
  Subgraph rest = delete_vertices(g, s);
  std::vector<char> in_a(static_cast<std::size_t>(rest.graph.size()), 0);
  for (Vertex v : a)
    if (!s.contains(v)) in_a[rest.local(v)] = 1;
  Bfs bfs(rest.graph);
  std::size_t worst = 0;
  for (Vertex v = 0; v < rest.graph.size(); ++v) {
    std::size_t count = 0;
    for (Vertex w : bfs.run(v, r)) count += in_a[w];
    worst = std::max(worst, count);
  }
  return static_cast<double>(worst) / static_cast<double>(a.size());
}

namespace {

std::size_t allowed_count(double epsilon, std::size_t size) {
  return static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(size) + 1e-9));
}

std::size_t worst_ball_count(const Graph& g, const std::vector<char>& in_a, const VertexSet& s, int r,
                             const std::vector<Vertex>& sources) {
  Subgraph rest = delete_vertices(g, s);
  Bfs bfs(rest.graph);
  std::size_t worst = 0;
  for (Vertex v : sources) {
    if (s.contains(v)) continue;
    std::size_t count = 0;
    for (Vertex w : bfs.run(rest.local(v), r)) count += in_a[rest.to_parent[w]];
    worst = std::max(worst, count);
  }
  return worst;
}

}  // namespace

SeparatorCertificate balanced_separator(const Graph& g, const VertexSet& a, int r, double epsilon,
                                        const VertexOrder& order, SeparatorOptions options) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw Error(ErrorCode::Input, "separator: epsilon must lie in (0, 1]");
  if (a.empty()) throw Error(ErrorCode::Input, "separator: the set A must be nonempty");
  if (r < 1) throw Error(ErrorCode::Input, "separator: r must be at least 1");
  if (order.size() != g.size()) throw Error(ErrorCode::Input, "separator: order size does not match the graph");
  for (Vertex v : a) require_vertex(g, v);

  SeparatorCertificate cert;
  cert.r = r;
  cert.epsilon = epsilon;
  cert.a = a;
  const std::size_t limit = allowed_count(epsilon, a.size());
  std::vector<char> in_a = a.mask(g.size());
  const std::vector<Vertex> everyone = VertexSet::range(g.size()).members();
  const int s_budget = wcol_of_order(g, order, 4 * r);
  const std::size_t m = static_cast<std::size_t>(std::floor(1.0 / epsilon + 1e-9)) + s_budget + 1;

  VertexSet x = VertexSet::range(g.size());
  while (true) {
    if (x.size() <= options.target_size) {
      cert.stop_reason = "target";
      break;
    }
    std::optional<SeparatorStep> best_step;
    VertexSet best_z;
    for (const auto& cand : uqw_candidates(g, x, 4 * r, m, order, {.maximize = true})) {
      std::vector<Vertex> keep;
      Subgraph rest = delete_vertices(g, cand.s);
      Bfs bfs(rest.graph);
      for (Vertex v : cand.b) {
        std::size_t count = 0;
        for (Vertex w : bfs.run(rest.local(v), 2 * r)) count += in_a[rest.to_parent[w]];
        if (count <= limit) keep.push_back(v);
      }
      VertexSet x2(std::move(keep));
      VertexSet z = x.minus(x2).united(cand.s);
      if (z.size() < x.size() && (!best_step || z.size() < best_z.size())) {
        best_step = SeparatorStep{x.size(), cand.s.size(), cand.b.size(), x2.size(), z.size()};
        best_z = std::move(z);
      }
    }
    if (!best_step) {
      if (options.stall_is_error)
        throw Error(ErrorCode::AlgorithmStall,
                    "separator exchange stalled at |X| = " + std::to_string(x.size()) + " after " +
                        std::to_string(cert.steps.size()) + " steps (r = " + std::to_string(r) +
                        ", eps = " + std::to_string(epsilon) + ", m = " + std::to_string(m) + ")");
      cert.stop_reason = "stalled";
      break;
    }
    if (worst_ball_count(g, in_a, best_z, r, everyone) > limit)
      throw Error(ErrorCode::Internal, "separator loop invariant failed after step " +
                                           std::to_string(cert.steps.size() + 1));
    cert.steps.push_back(*best_step);
    x = std::move(best_z);
  }
  if (options.prune) {
    std::vector<Vertex> largest_first(x.members().rbegin(), x.members().rend());
    for (Vertex v : largest_first) {
      VertexSet smaller = x.minus(VertexSet{v});
      if (worst_ball_count(g, in_a, smaller, r, everyone) <= limit) x = std::move(smaller);
    }
  }
  cert.s = x;
  cert.worst_ball_fraction = worst_ball_fraction(g, a, x, r);
  return cert;
}

Cover neighborhood_cover(const Graph& g, int r, const VertexOrder& order) {
  if (r < 0) throw Error(ErrorCode::Input, "cover: r must be non-negative");
  if (order.size() != g.size()) throw Error(ErrorCode::Input, "cover: order size does not match the graph");
  const Vertex n = g.size();
  WReachTable table = wreach_table(g, order, 2 * r);
  std::vector<std::vector<Vertex>> cluster_of(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w)
    for (Vertex u : table.sets[w]) cluster_of[u].push_back(w);

  Cover cover;
  cover.r = r;
  cover.radius_bound = 2 * r;
  std::vector<Vertex> minimum(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    minimum[v] = order.min_of(ball(g, v, r));
    used[minimum[v]] = 1;
  }
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    if (!used[u]) continue;
    index[u] = cover.clusters.size();
    cover.clusters.push_back({u, VertexSet(cluster_of[u])});
  }
  cover.home.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) cover.home[v] = index[minimum[v]];
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& c : cover.clusters)
    for (Vertex w : c.members) ++degree[w];
  cover.max_degree = n ? *std::max_element(degree.begin(), degree.end()) : 0;
  return cover;
}

PartitionCover partition_cover(const Graph& g, int r, const VertexOrder& order) {
  if (r < 0) throw Error(ErrorCode::Input, "partition: r must be non-negative");
  if (order.size() != g.size()) throw Error(ErrorCode::Input, "partition: order size does not match the graph");
  const Vertex n = g.size();
  WReachTable far = wreach_table(g, order, 4 * r + 1);
  WReachTable near = wreach_table(g, order, 2 * r);
  PartitionCover pc;
  pc.r = r;
  pc.color.assign(static_cast<std::size_t>(n), -1);
  int colors = 0;
  for (Vertex v : order.perm()) {
    std::vector<char> taken(static_cast<std::size_t>(colors) + 1, 0);
    for (Vertex u : far.sets[v])
      if (u != v) taken[pc.color[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    pc.color[v] = c;
    colors = std::max(colors, c + 1);
  }
  std::vector<std::vector<char>> member(static_cast<std::size_t>(colors),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
  // w ∈ X_2r[u] iff u ∈ WReach_2r[w].
  for (Vertex w = 0; w < n; ++w)
    for (Vertex u : near.sets[w]) member[pc.color[u]][w] = 1;
  for (const auto& mask : member) pc.parts.push_back(VertexSet::from_mask(mask));
  return pc;
}

}  // namespace sparsity
