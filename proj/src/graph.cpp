#include "sparsity/graph.hpp"

#include <algorithm>
#include <limits>

#include "sparsity/error.hpp"

namespace sparsity {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Input: return "input";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Capability: return "capability";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::StrategyBug: return "strategy";
    case ErrorCode::AlgorithmStall: return "stall";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

void throw_cap_exceeded(const char* operation, long long size, long long cap) {
  throw Error(ErrorCode::Capability, std::string(operation) + ": input size " +
                                         std::to_string(size) + " exceeds the search cap of " +
                                         std::to_string(cap));
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(std::max<Vertex>(n, 0)));
  for (Vertex v = 0; v < n; ++v) s.members_[v] = v;
  return s;
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet s;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(s.members_));
  return s;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet s;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(s.members_));
  return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(s.members_));
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

std::vector<char> VertexSet::mask(Vertex n) const {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_)
    if (v >= 0 && v < n) m[v] = 1;
  return m;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(Vertex n) : offsets_(static_cast<std::size_t>(n) + 1, 0) {}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 0) throw Error(ErrorCode::Validation, "negative vertex count");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::Validation, "label table size does not match vertex count");
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::Validation, "edge endpoint out of range: " + std::to_string(u) +
                                             " " + std::to_string(v));
    if (u == v) throw Error(ErrorCode::Validation, "self-loop at vertex " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : directed) ++g.offsets_[u + 1];
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.reserve(directed.size());
  for (auto [u, v] : directed) g.adjacency_.push_back(v);
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(size()))
    throw Error(ErrorCode::Validation, "label table size does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

VertexSet Subgraph::lift(const VertexSet& local_set) const {
  std::vector<Vertex> out;
  out.reserve(local_set.size());
  for (Vertex v : local_set) out.push_back(to_parent[v]);
  return VertexSet(std::move(out));
}

VertexSet DistanceProfile::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] != kUnreached) out.push_back(static_cast<Vertex>(v));
  return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------- Bfs

Bfs::Bfs(const Graph& graph)
    : graph_(&graph),
      stamp_(static_cast<std::size_t>(graph.size()), 0),
      dist_(static_cast<std::size_t>(graph.size()), 0),
      parent_(static_cast<std::size_t>(graph.size()), kNoVertex) {}

const std::vector<Vertex>& Bfs::run(std::span<const Vertex> sources, int radius,
                                    std::span<const char> allowed) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0u);
    epoch_ = 1;
  }
  order_.clear();
  for (Vertex s : sources) {
    if (stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    dist_[s] = 0;
    parent_[s] = kNoVertex;
    order_.push_back(s);
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Vertex u = order_[head];
    if (radius >= 0 && dist_[u] >= radius) continue;
    for (Vertex w : graph_->neighbors(u)) {
      if (stamp_[w] == epoch_) continue;
      if (!allowed.empty() && !allowed[w]) continue;
      stamp_[w] = epoch_;
      dist_[w] = dist_[u] + 1;
      parent_[w] = u;
      order_.push_back(w);
    }
  }
  return order_;
}

// --------------------------------------------------------------- Operations

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw Error(ErrorCode::Input, "unknown vertex id " + std::to_string(v) + " (graph has " +
                                      std::to_string(g.size()) + " vertices)");
}

static void require_radius(int r) {
  if (r < 0) throw Error(ErrorCode::Input, "radius must be non-negative");
}

DistanceProfile distance_profile(const Graph& g, Vertex source, int radius) {
  require_vertex(g, source);
  require_radius(radius);
  Bfs bfs(g);
  bfs.run(source, radius);
  DistanceProfile p{source, radius, std::vector<int>(static_cast<std::size_t>(g.size()), kUnreached)};
  for (Vertex v : bfs.order()) p.dist[v] = bfs.dist(v);
  return p;
}

VertexSet ball(const Graph& g, Vertex v, int r) {
  require_vertex(g, v);
  require_radius(r);
  Bfs bfs(g);
  return VertexSet(bfs.run(v, r));
}

VertexSet multi_source_ball(const Graph& g, const VertexSet& sources, int r) {
  if (sources.empty()) throw Error(ErrorCode::Input, "multi_source_ball needs at least one source");
  for (Vertex v : sources) require_vertex(g, v);
  require_radius(r);
  Bfs bfs(g);
  return VertexSet(bfs.run(sources.members(), r));
}

int distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  Bfs bfs(g);
  bfs.run(u, -1);
  return bfs.dist(v);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d(static_cast<std::size_t>(g.size()));
  Bfs bfs(g);
  for (Vertex u = 0; u < g.size(); ++u) {
    d[u].assign(static_cast<std::size_t>(g.size()), kUnreached);
    for (Vertex v : bfs.run(u, -1)) d[u][v] = bfs.dist(v);
  }
  return d;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (Vertex v : keep) require_vertex(g, v);
  Subgraph s;
  s.to_local.assign(static_cast<std::size_t>(g.size()), kNoVertex);
  s.to_parent = keep.members();
  for (std::size_t i = 0; i < s.to_parent.size(); ++i)
    s.to_local[s.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex u : keep) {
    labels.push_back(g.label(u));
    for (Vertex w : g.neighbors(u))
      if (u < w && s.to_local[w] != kNoVertex) edges.emplace_back(s.to_local[u], s.to_local[w]);
  }
  s.graph = Graph::from_edges(static_cast<Vertex>(keep.size()), edges, std::move(labels));
  return s;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  for (Vertex v : removed) require_vertex(g, v);
  return induced_subgraph(g, VertexSet::range(g.size()).minus(removed));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  Bfs bfs(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    const auto& reached = bfs.run(v, -1);
    for (Vertex u : reached) seen[u] = 1;
    out.emplace_back(reached);
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph power_graph(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorCode::Input, "power_graph needs r >= 1");
  std::vector<Edge> edges;
  Bfs bfs(g);
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : bfs.run(u, r))
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(g.size(), edges, g.labels());
}

int eccentricity(const Graph& g, Vertex v) {
  require_vertex(g, v);
  Bfs bfs(g);
  const auto& reached = bfs.run(v, -1);
  if (reached.size() != static_cast<std::size_t>(g.size())) return kUnreached;
  return bfs.dist(reached.back());
}

RadiusResult radius_of(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::Precondition, "radius of the empty graph is undefined");
  RadiusResult best{std::numeric_limits<int>::max(), kNoVertex};
  Bfs bfs(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& reached = bfs.run(v, -1);
    if (reached.size() != static_cast<std::size_t>(g.size()))
      throw Error(ErrorCode::Precondition, "radius of a disconnected graph is undefined");
    int ecc = bfs.dist(reached.back());
    if (ecc < best.radius) best = {ecc, v};
  }
  return best;
}

int radius_from(const Graph& g, const VertexSet& vertices, Vertex center) {
  if (!vertices.contains(center)) return kUnreached;
  auto mask = vertices.mask(g.size());
  Bfs bfs(g);
  const auto& reached = bfs.run(center, -1, mask);
  if (reached.size() != vertices.size()) return kUnreached;
  return bfs.dist(reached.back());
}

}  // namespace sparsity
