#include "sparsity/validate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace sparsity {

namespace {

// Hop distances from `source` inside the vertices with inside[v] set, up to
// `limit` (negative: no limit). Unreached vertices get -1.
std::vector<int> hops(const Graph& g, Vertex source, const std::vector<char>& inside, int limit) {
  std::vector<int> d(static_cast<std::size_t>(g.size()), -1);
  if (!inside[source]) return d;
  std::deque<Vertex> queue{source};
  d[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (limit >= 0 && d[v] == limit) continue;
    for (Vertex w : g.neighbors(v))
      if (inside[w] && d[w] < 0) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

std::vector<char> all_inside(const Graph& g) { return std::vector<char>(static_cast<std::size_t>(g.size()), 1); }

std::vector<char> outside_of(const Graph& g, const VertexSet& removed) {
  auto inside = all_inside(g);
  for (Vertex v : removed)
    if (g.contains(v)) inside[v] = 0;
  return inside;
}

std::string name(Vertex v) { return "v" + std::to_string(v); }

bool in_range(const Graph& g, const VertexSet& s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return g.contains(v); });
}

// Radius of g[set] seen from `center`, or -1 when not connected.
int spread(const Graph& g, const VertexSet& set, Vertex center) {
  std::vector<char> inside(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : set) inside[v] = 1;
  auto d = hops(g, center, inside, -1);
  int worst = 0;
  for (Vertex v : set) {
    if (d[v] < 0) return -1;
    worst = std::max(worst, d[v]);
  }
  return worst;
}

}  // namespace

std::vector<VertexSet> reference_wreach(const Graph& g, const VertexOrder& order, int r) {
  const Vertex n = g.size();
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    for (Vertex w = 0; w < n; ++w) inside[w] = w == u || order.less(u, w);
    auto d = hops(g, u, inside, r);
    for (Vertex v = 0; v < n; ++v)
      if (d[v] >= 0) sets[v].push_back(u);
  }
  std::vector<VertexSet> out;
  for (auto& s : sets) out.emplace_back(std::move(s));
  return out;
}

int reference_wcol(const Graph& g, const VertexOrder& order, int r) {
  int best = 0;
  for (const auto& s : reference_wreach(g, order, r)) best = std::max(best, static_cast<int>(s.size()));
  return best;
}

Verdict check_order_value(const Graph& g, const VertexOrder& order, int r, int claimed) {
  Verdict v;
  if (order.size() != g.size()) {
    v.fail("order has " + std::to_string(order.size()) + " vertices, graph has " + std::to_string(g.size()));
    return v;
  }
  int actual = reference_wcol(g, order, r);
  if (actual != claimed)
    v.fail("claimed value " + std::to_string(claimed) + " but the order gives " + std::to_string(actual));
  return v;
}

Verdict check_elimination_forest(const Graph& g, const EliminationForest& forest, int claimed_depth) {
  Verdict v;
  const Vertex n = g.size();
  if (forest.parent.size() != static_cast<std::size_t>(n)) {
    v.fail("forest has the wrong number of vertices");
    return v;
  }
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex x = 0; x < n; ++x) {
    int steps = 1;
    for (Vertex p = forest.parent[x]; p != kNoVertex; p = forest.parent[p]) {
      if (!g.contains(p) || ++steps > n) {
        v.fail("parent chain of " + name(x) + " is not a rooted path");
        return v;
      }
    }
    depth[x] = steps;
  }
  auto ancestor = [&](Vertex a, Vertex b) {
    for (Vertex p = forest.parent[b]; p != kNoVertex; p = forest.parent[p])
      if (p == a) return true;
    return false;
  };
  for (auto [a, b] : g.edges())
    if (!ancestor(a, b) && !ancestor(b, a)) v.fail("edge " + name(a) + name(b) + " joins unrelated vertices");
  int actual = n ? *std::max_element(depth.begin(), depth.end()) : 0;
  if (actual != claimed_depth)
    v.fail("claimed depth " + std::to_string(claimed_depth) + " but the forest has depth " + std::to_string(actual));
  return v;
}

Verdict check_uqw(const Graph& g, const UqwCertificate& cert, bool require_guarantee) {
  Verdict v;
  if (!in_range(g, cert.a) || !in_range(g, cert.s) || !in_range(g, cert.b)) {
    v.fail("certificate names vertices outside the graph");
    return v;
  }
  for (Vertex b : cert.b) {
    if (cert.s.contains(b)) v.fail(name(b) + " is in both S and B");
    if (!cert.a.contains(b)) v.fail(name(b) + " is in B but not in A");
  }
  auto inside = outside_of(g, cert.s);
  for (Vertex b : cert.b) {
    if (!inside[b]) continue;
    auto d = hops(g, b, inside, cert.r);
    for (Vertex c : cert.b)
      if (c > b && d[c] >= 0)
        v.fail(name(b) + " and " + name(c) + " are at distance " + std::to_string(d[c]) + " <= r in G - S");
  }
  if (require_guarantee) {
    if (cert.s.size() > static_cast<std::size_t>(cert.c))
      v.fail("|S| = " + std::to_string(cert.s.size()) + " exceeds c = " + std::to_string(cert.c));
    if (cert.b.size() < cert.m)
      v.fail("|B| = " + std::to_string(cert.b.size()) + " is below m = " + std::to_string(cert.m));
  }
  return v;
}

Verdict check_separator(const Graph& g, const SeparatorCertificate& cert) {
  Verdict v;
  if (!in_range(g, cert.a) || !in_range(g, cert.s) || cert.a.empty()) {
    v.fail("certificate names vertices outside the graph or has empty A");
    return v;
  }
  auto inside = outside_of(g, cert.s);
  std::size_t worst = 0;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!inside[x]) continue;
    auto d = hops(g, x, inside, cert.r);
    std::size_t count = 0;
    for (Vertex a : cert.a) count += d[a] >= 0;
    worst = std::max(worst, count);
  }
  double fraction = static_cast<double>(worst) / static_cast<double>(cert.a.size());
  if (fraction > cert.epsilon + 1e-12)
    v.fail("worst ball holds a fraction " + std::to_string(fraction) + " of A, above eps = " +
           std::to_string(cert.epsilon));
  if (std::abs(fraction - cert.worst_ball_fraction) > 1e-9)
    v.fail("reported worst fraction " + std::to_string(cert.worst_ball_fraction) + " differs from " +
           std::to_string(fraction));
  return v;
}

Verdict check_cover(const Graph& g, const Cover& cover, std::optional<int> degree_bound) {
  Verdict v;
  const Vertex n = g.size();
  auto everyone = all_inside(g);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
    const Cluster& c = cover.clusters[i];
    if (!in_range(g, c.members) || !c.members.contains(c.center)) {
      v.fail("cluster " + std::to_string(i) + " is malformed");
      continue;
    }
    for (Vertex w : c.members) ++degree[w];
    int rad = spread(g, c.members, c.center);
    if (rad < 0) v.fail("cluster " + std::to_string(i) + " is not connected");
    else if (rad > cover.radius_bound)
      v.fail("cluster " + std::to_string(i) + " has radius " + std::to_string(rad) + " around " + name(c.center) +
             ", bound " + std::to_string(cover.radius_bound));
  }
  if (!v.ok) return v;
  for (Vertex x = 0; x < n; ++x) {
    auto d = hops(g, x, everyone, cover.r);
    auto covers = [&](const Cluster& c) {
      for (Vertex w = 0; w < n; ++w)
        if (d[w] >= 0 && !c.members.contains(w)) return false;
      return true;
    };
    bool found = false;
    if (static_cast<std::size_t>(x) < cover.home.size() && cover.home[x] < cover.clusters.size())
      found = covers(cover.clusters[cover.home[x]]);
    for (std::size_t i = 0; !found && i < cover.clusters.size(); ++i) found = covers(cover.clusters[i]);
    if (!found) v.fail("no cluster contains the " + std::to_string(cover.r) + "-ball of " + name(x));
  }
  int max_degree = n ? *std::max_element(degree.begin(), degree.end()) : 0;
  if (max_degree != cover.max_degree)
    v.fail("reported max degree " + std::to_string(cover.max_degree) + " but clusters give " +
           std::to_string(max_degree));
  if (degree_bound && max_degree > *degree_bound)
    v.fail("max degree " + std::to_string(max_degree) + " exceeds bound " + std::to_string(*degree_bound));
  return v;
}

Verdict check_partition(const Graph& g, const PartitionCover& pc, std::optional<int> count_bound) {
  Verdict v;
  const Vertex n = g.size();
  auto everyone = all_inside(g);
  std::vector<std::vector<char>> inside;
  for (std::size_t i = 0; i < pc.parts.size(); ++i) {
    if (!in_range(g, pc.parts[i])) {
      v.fail("part " + std::to_string(i) + " names vertices outside the graph");
      return v;
    }
    inside.push_back(pc.parts[i].mask(n));
  }
  for (Vertex x = 0; x < n; ++x) {
    auto d = hops(g, x, everyone, pc.r);
    bool found = false;
    for (std::size_t i = 0; !found && i < inside.size(); ++i) {
      found = true;
      for (Vertex w = 0; w < n && found; ++w)
        if (d[w] >= 0 && !inside[i][w]) found = false;
    }
    if (!found) v.fail("no part contains the " + std::to_string(pc.r) + "-ball of " + name(x));
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex x : pc.parts[i]) {
      if (seen[x]) continue;
      auto d = hops(g, x, inside[i], -1);
      std::vector<Vertex> comp;
      for (Vertex w = 0; w < n; ++w)
        if (d[w] >= 0) {
          comp.push_back(w);
          seen[w] = 1;
        }
      int best = -1;
      for (Vertex c : comp) {
        auto dc = hops(g, c, inside[i], -1);
        int ecc = 0;
        for (Vertex w : comp) ecc = std::max(ecc, dc[w]);
        if (best < 0 || ecc < best) best = ecc;
      }
      if (best > 2 * pc.r)
        v.fail("a component of part " + std::to_string(i) + " has radius " + std::to_string(best) + " > 2r");
    }
  }
  if (count_bound && static_cast<int>(pc.parts.size()) > *count_bound)
    v.fail(std::to_string(pc.parts.size()) + " parts exceed the bound " + std::to_string(*count_bound));
  return v;
}

Verdict check_transcript(const Graph& g, const GameTranscript& t) {
  Verdict v;
  const Vertex n = g.size();
  const GameConfig& cfg = t.config;
  if (t.graph_size != n) v.fail("transcript is for a graph on " + std::to_string(t.graph_size) + " vertices");
  if (cfg.round_cap < 1 || cfg.batch_limit < 1) v.fail("configuration out of range");
  if (static_cast<int>(t.rounds.size()) > cfg.round_cap) v.fail("more rounds than the round cap");
  if (!v.ok) return v;

  std::vector<char> residual = all_inside(g);
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const GameRound& round = t.rounds[i];
    const std::string at = "round " + std::to_string(i + 1) + ": ";
    const VertexSet& c = round.connector.vertices;
    if (c.empty() || !in_range(g, c) || !in_range(g, round.splitter) || !in_range(g, round.residual)) {
      v.fail(at + "malformed move");
      return v;
    }
    for (Vertex x : c)
      if (!residual[x]) v.fail(at + "connector uses " + name(x) + " outside the residual graph");
    if (!c.contains(round.connector.center)) v.fail(at + "center is not in the connector set");
    if (!v.ok) return v;
    int rad = spread(g, c, round.connector.center);
    if (rad < 0) v.fail(at + "connector set is not connected");
    if (cfg.kind == GameKind::Splitter && rad > cfg.r)
      v.fail(at + "connector set reaches distance " + std::to_string(rad) + " from its center");
    if (cfg.kind == GameKind::Treedepth)
      for (Vertex x : c)
        for (Vertex w : g.neighbors(x))
          if (residual[w] && !c.contains(w)) v.fail(at + "connector set is not a whole component");
    if (round.splitter.empty()) v.fail(at + "splitter deleted nothing");
    if (round.splitter.size() > static_cast<std::size_t>(cfg.batch_limit)) v.fail(at + "splitter exceeded the batch limit");
    for (Vertex x : round.splitter)
      if (!c.contains(x)) v.fail(at + "splitter deleted " + name(x) + " outside the connector set");
    std::vector<Vertex> left;
    for (Vertex x : c)
      if (!round.splitter.contains(x)) left.push_back(x);
    if (!(VertexSet(left) == round.residual)) v.fail(at + "recorded residual is wrong");
    std::fill(residual.begin(), residual.end(), 0);
    for (Vertex x : left) residual[x] = 1;
    if (!v.ok) return v;
  }
  bool empty = std::none_of(residual.begin(), residual.end(), [](char x) { return x != 0; });
  Winner expected = empty ? Winner::Splitter : Winner::Connector;
  if (t.winner != expected) v.fail("declared winner does not match the final residual");
  if (!empty && static_cast<int>(t.rounds.size()) < cfg.round_cap) v.fail("play stopped before the round cap");
  return v;
}

}  // namespace sparsity
