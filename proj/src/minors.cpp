#include "sparsity/minors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sparsity/error.hpp"
#include "sparsity/io.hpp"
#include "sparsity/random.hpp"

namespace sparsity {

MinorCheck verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model) {
  MinorCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.violations.push_back(std::move(msg));
  };
  if (model.branch_sets.size() != static_cast<std::size_t>(h.size())) {
    fail("expected " + std::to_string(h.size()) + " branch sets, got " +
         std::to_string(model.branch_sets.size()));
    return check;
  }
  std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t x = 0; x < model.branch_sets.size(); ++x) {
    const VertexSet& b = model.branch_sets[x];
    if (b.empty()) fail("branch set " + std::to_string(x) + " is empty");
    for (Vertex v : b) {
      if (!g.contains(v)) {
        fail("branch set " + std::to_string(x) + " contains unknown vertex " + std::to_string(v));
        continue;
      }
      if (owner[v] >= 0)
        fail("branch sets " + std::to_string(owner[v]) + " and " + std::to_string(x) +
             " share vertex " + std::to_string(v));
      owner[v] = static_cast<int>(x);
    }
  }
  if (!check.ok) return check;

  for (std::size_t x = 0; x < model.branch_sets.size(); ++x) {
    const VertexSet& b = model.branch_sets[x];
    int best = -1;
    for (Vertex c : b) {
      int e = radius_from(g, b, c);
      if (e == kUnreached) {
        best = -2;
        break;
      }
      if (best < 0 || e < best) best = e;
    }
    if (best == -2) fail("branch set " + std::to_string(x) + " is not connected");
    else if (best > model.depth)
      fail("branch set " + std::to_string(x) + " has radius " + std::to_string(best) +
           " > depth " + std::to_string(model.depth));
  }

  auto h_edges = h.edges();
  if (model.edge_witness.size() != h_edges.size()) {
    fail("expected " + std::to_string(h_edges.size()) + " witness edges, got " +
         std::to_string(model.edge_witness.size()));
    return check;
  }
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    auto [x, y] = h_edges[i];
    auto [a, b] = model.edge_witness[i];
    if (!g.has_edge(a, b)) {
      fail("witness of edge " + std::to_string(x) + "-" + std::to_string(y) + " is not an edge");
      continue;
    }
    bool joins = (owner[a] == x && owner[b] == y) || (owner[a] == y && owner[b] == x);
    if (!joins)
      fail("witness of edge " + std::to_string(x) + "-" + std::to_string(y) +
           " does not join the two branch sets");
  }
  return check;
}

namespace {

// Backtracking over centers and, per pattern edge, over center-to-center
// paths of length <= 2r+1 split into an x-part and a y-part of length <= r.
// Every depth-r model contains such a "minimal" model, so the search is
// complete.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, int r) : g_(g), h_(h), r_(r), bfs_(g) {
    owner_.assign(static_cast<std::size_t>(g.size()), -1);
    center_.assign(static_cast<std::size_t>(h.size()), kNoVertex);
    h_edges_ = h.edges();
    witness_.assign(h_edges_.size(), Edge{kNoVertex, kNoVertex});
    for (std::size_t i = 0; i < h_edges_.size(); ++i) {
      edge_index_[h_edges_[i]] = i;
    }
    plan_order();
  }

  std::optional<MinorModel> run() {
    if (h_.size() > g_.size()) return std::nullopt;
    if (!place(0)) return std::nullopt;
    MinorModel m;
    m.depth = r_;
    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(h_.size()));
    for (Vertex v = 0; v < g_.size(); ++v)
      if (owner_[v] >= 0) sets[owner_[v]].push_back(v);
    for (auto& s : sets) m.branch_sets.emplace_back(std::move(s));
    m.edge_witness = witness_;
    return m;
  }

 private:
  void plan_order() {
    const Vertex k = h_.size();
    std::vector<char> chosen(static_cast<std::size_t>(k), 0);
    for (Vertex step = 0; step < k; ++step) {
      Vertex best = kNoVertex;
      int best_links = -1;
      for (Vertex y = 0; y < k; ++y) {
        if (chosen[y]) continue;
        int links = 0;
        for (Vertex x : h_.neighbors(y)) links += chosen[x];
        if (links > best_links || (links == best_links && h_.degree(y) > h_.degree(best))) {
          best = y;
          best_links = links;
        }
      }
      chosen[best] = 1;
      order_.push_back(best);
      std::vector<std::size_t> pending;
      for (Vertex x : h_.neighbors(best))
        if (chosen[x] && x != best) pending.push_back(edge_index_.at(x < best ? Edge{x, best} : Edge{best, x}));
      edges_after_.push_back(std::move(pending));
    }
  }

  bool place(std::size_t step) {
    if (step == order_.size()) return true;
    Vertex y = order_[step];
    for (Vertex c = 0; c < g_.size(); ++c) {
      if (owner_[c] >= 0) continue;
      if (r_ == 0 && g_.degree(c) < h_.degree(y)) continue;
      owner_[c] = y;
      center_[y] = c;
      if (connect(step, 0)) return true;
      owner_[c] = -1;
      center_[y] = kNoVertex;
    }
    return false;
  }

  bool connect(std::size_t step, std::size_t i) {
    const auto& pending = edges_after_[step];
    if (i == pending.size()) return place(step + 1);
    std::size_t e = pending[i];
    Vertex x = h_edges_[e].first;
    Vertex y = h_edges_[e].second;
    if (auto w = existing_link(x, y)) {
      witness_[e] = *w;
      return connect(step, i + 1);
    }
    // Distances from y's center through vertices y may use (lower bounds for
    // the y-part length).
    std::vector<char> y_ok(static_cast<std::size_t>(g_.size()));
    for (Vertex v = 0; v < g_.size(); ++v) y_ok[v] = owner_[v] == -1 || owner_[v] == y;
    bfs_.run(center_[y], r_, y_ok);
    std::vector<int> y_dist(static_cast<std::size_t>(g_.size()), kUnreached);
    for (Vertex v : bfs_.order()) y_dist[v] = bfs_.dist(v);

    std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> tried;
    std::vector<Vertex> x_path{center_[x]};
    std::vector<char> on_path(static_cast<std::size_t>(g_.size()), 0);
    on_path[center_[x]] = 1;

    std::function<bool(Vertex)> extend_y;
    std::vector<Vertex> y_path;
    Vertex link_a = kNoVertex;

    auto commit = [&]() {
      std::vector<Vertex> fresh_x, fresh_y;
      for (Vertex v : x_path)
        if (owner_[v] == -1) fresh_x.push_back(v);
      for (Vertex v : y_path)
        if (owner_[v] == -1) fresh_y.push_back(v);
      std::sort(fresh_x.begin(), fresh_x.end());
      std::sort(fresh_y.begin(), fresh_y.end());
      if (!tried.emplace(fresh_x, fresh_y).second) return false;
      for (Vertex v : fresh_x) owner_[v] = x;
      for (Vertex v : fresh_y) owner_[v] = y;
      witness_[e] = Edge{link_a, y_path.front()};
      if (connect(step, i + 1)) return true;
      for (Vertex v : fresh_x) owner_[v] = -1;
      for (Vertex v : fresh_y) owner_[v] = -1;
      return false;
    };

    // y_path runs from the linking vertex to y's center.
    extend_y = [&](Vertex v) -> bool {
      int used = static_cast<int>(y_path.size()) - 1;
      if (v == center_[y]) return commit();
      if (used >= r_) return false;
      for (Vertex w : g_.neighbors(v)) {
        if (on_path[w] || !y_ok[w]) continue;
        if (y_dist[w] == kUnreached || used + 1 + y_dist[w] > r_) continue;
        on_path[w] = 1;
        y_path.push_back(w);
        bool ok = extend_y(w);
        y_path.pop_back();
        on_path[w] = 0;
        if (ok) return true;
      }
      return false;
    };

    std::function<bool(Vertex)> extend_x = [&](Vertex a) -> bool {
      for (Vertex b : g_.neighbors(a)) {
        if (on_path[b] || !y_ok[b] || y_dist[b] == kUnreached) continue;
        on_path[b] = 1;
        y_path.assign(1, b);
        link_a = a;
        bool ok = extend_y(b);
        y_path.clear();
        on_path[b] = 0;
        if (ok) return true;
      }
      if (static_cast<int>(x_path.size()) - 1 >= r_) return false;
      for (Vertex w : g_.neighbors(a)) {
        if (on_path[w] || !(owner_[w] == -1 || owner_[w] == x)) continue;
        on_path[w] = 1;
        x_path.push_back(w);
        bool ok = extend_x(w);
        x_path.pop_back();
        on_path[w] = 0;
        if (ok) return true;
      }
      return false;
    };
    return extend_x(center_[x]);
  }

  std::optional<Edge> existing_link(Vertex x, Vertex y) const {
    for (Vertex a = 0; a < g_.size(); ++a) {
      if (owner_[a] != x) continue;
      for (Vertex b : g_.neighbors(a))
        if (owner_[b] == y) return Edge{a, b};
    }
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  int r_;
  Bfs bfs_;
  std::vector<int> owner_;
  std::vector<Vertex> center_;
  std::vector<Edge> h_edges_;
  std::vector<Edge> witness_;
  std::map<Edge, std::size_t> edge_index_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> edges_after_;
};

}  // namespace

std::optional<MinorModel> find_depth_r_minor(const Graph& g, const Graph& h, int r,
                                             MinorSearchLimits limits) {
  if (r < 0) throw Error(ErrorCode::Input, "depth must be non-negative");
  if (h.size() > limits.max_pattern_vertices)
    throw_cap_exceeded("find_depth_r_minor (pattern)", h.size(), limits.max_pattern_vertices);
  if (g.size() > limits.max_host_vertices)
    throw_cap_exceeded("find_depth_r_minor (host)", g.size(), limits.max_host_vertices);
  auto model = MinorSearch(g, h, r).run();
  if (model) {
    auto check = verify_minor_model(g, h, *model);
    if (!check.ok) throw Error(ErrorCode::Internal, "minor search produced an invalid model: " + check.violations.front());
  }
  return model;
}

bool has_shallow_clique(const Graph& g, Vertex m, int r, MinorSearchLimits limits) {
  if (m < 0) throw Error(ErrorCode::Input, "clique size must be non-negative");
  if (g.size() < m) return false;
  return find_depth_r_minor(g, complete_graph(m), r, limits).has_value();
}

// ------------------------------------------------------------------ density

namespace {

struct Contraction {
  std::vector<VertexSet> sets;
  Graph quotient;
  std::vector<Edge> witness;  // aligned with quotient.edges()
};

Contraction contract(const Graph& g, const std::vector<int>& owner, int parts) {
  Contraction c;
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(parts));
  for (Vertex v = 0; v < g.size(); ++v) sets[owner[v]].push_back(v);
  for (auto& s : sets) c.sets.emplace_back(std::move(s));
  std::map<Edge, Edge> links;
  for (auto [a, b] : g.edges()) {
    int x = owner[a], y = owner[b];
    if (x == y) continue;
    Edge key = x < y ? Edge{x, y} : Edge{y, x};
    Edge w = x < y ? Edge{a, b} : Edge{b, a};
    links.emplace(key, w);
  }
  std::vector<Edge> qedges;
  for (const auto& [key, w] : links) {
    qedges.push_back(key);
    c.witness.push_back(w);
  }
  c.quotient = Graph::from_edges(parts, qedges);
  return c;
}

// Greedy peeling: repeatedly drop a minimum-degree vertex and keep the
// densest intermediate vertex set.
VertexSet densest_by_peeling(const Graph& h, double& best_density) {
  const Vertex n = h.size();
  std::vector<Vertex> degree(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = h.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<Vertex> removal;
  std::size_t edges = h.edge_count();
  std::size_t alive_count = static_cast<std::size_t>(n);
  best_density = n ? static_cast<double>(edges) / n : 0.0;
  std::size_t best_cut = 0;
  while (alive_count > 1) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    alive[v] = 0;
    removal.push_back(v);
    edges -= static_cast<std::size_t>(d);
    --alive_count;
    for (Vertex w : h.neighbors(v)) {
      if (!alive[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
    double density = static_cast<double>(edges) / static_cast<double>(alive_count);
    if (density > best_density) {
      best_density = density;
      best_cut = removal.size();
    }
  }
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < best_cut; ++i) keep[removal[i]] = 0;
  return VertexSet::from_mask(keep);
}

}  // namespace

DensityReport density_report(const Graph& g, int r, int budget, std::uint64_t seed) {
  if (budget < 1) throw Error(ErrorCode::Input, "density_report needs a budget of at least 1");
  if (r < 0) throw Error(ErrorCode::Input, "depth must be non-negative");
  DensityReport report;
  report.depth = r;
  report.seed = seed;
  report.attempts = budget;
  report.density = -1.0;
  const Vertex n = g.size();

  auto consider = [&](const std::vector<int>& owner, int parts) {
    Contraction c = contract(g, owner, parts);
    double density = 0.0;
    VertexSet keep = densest_by_peeling(c.quotient, density);
    if (density <= report.density) return;
    report.density = density;
    Subgraph sub = induced_subgraph(c.quotient, keep);
    report.minor = Graph::from_edges(sub.graph.size(), sub.graph.edges());
    report.model = MinorModel{r, {}, {}};
    for (Vertex x : keep) report.model.branch_sets.push_back(c.sets[x]);
    auto qedges = c.quotient.edges();
    for (auto [x, y] : report.minor.edges()) {
      Edge key{sub.to_parent[x], sub.to_parent[y]};
      auto it = std::lower_bound(qedges.begin(), qedges.end(), key);
      report.model.edge_witness.push_back(c.witness[static_cast<std::size_t>(it - qedges.begin())]);
    }
  };

  // The graph itself is a depth-0 minor.
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) owner[v] = v;
  consider(owner, n);

  Bfs bfs(g);
  for (int attempt = 0; attempt < budget && r > 0; ++attempt) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Vertex> centers = VertexSet::range(n).members();
    rng.shuffle(centers);
    const bool by_degree = attempt % 2 == 0;
    if (by_degree)
      std::stable_sort(centers.begin(), centers.end(),
                       [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<char> free_mask(static_cast<std::size_t>(n), 1);
    std::fill(owner.begin(), owner.end(), -1);
    int parts = 0;
    for (Vertex c : centers) {
      if (!free_mask[c]) continue;
      int radius = by_degree ? r : static_cast<int>(rng.below(static_cast<std::uint64_t>(r) + 1));
      for (Vertex v : bfs.run(c, radius, free_mask)) {
        owner[v] = parts;
        free_mask[v] = 0;
      }
      ++parts;
    }
    consider(owner, parts);
  }
  if (report.density < 0) report.density = 0.0;
  auto check = verify_minor_model(g, report.minor, report.model);
  if (!check.ok) throw Error(ErrorCode::Internal, "density_report produced an invalid model: " + check.violations.front());
  return report;
}

}  // namespace sparsity
