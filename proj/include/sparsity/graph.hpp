#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sparsity {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = -1;
inline constexpr int kUnreached = -1;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  /// All vertices 0..n-1.
  static VertexSet range(Vertex n);
  /// Members of a 0/1 mask.
  static VertexSet from_mask(std::span<const char> mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// 0/1 membership mask of length n.
  std::vector<char> mask(Vertex n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// adjacency (CSR layout) and an optional label per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n);

  /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
  /// and out-of-range endpoints raise ErrorCode::Validation.
  static Graph from_edges(Vertex n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  Vertex size() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  bool contains(Vertex v) const { return v >= 0 && v < size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The vertex label, or its decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  /// Same vertex count and edge set; labels are ignored.
  bool same_structure(const Graph& other) const {
    return offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

/// Induced subgraph together with the id maps to and from its parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<Vertex> to_local;   // parent id -> local id or kNoVertex

  Vertex local(Vertex parent) const { return to_local[parent]; }
  VertexSet lift(const VertexSet& local_set) const;
};

/// Hop distances from a source, truncated at `radius`.
struct DistanceProfile {
  Vertex source = kNoVertex;
  int radius = 0;
  std::vector<int> dist;  // kUnreached beyond the radius

  bool reached(Vertex v) const { return dist[v] != kUnreached; }
  VertexSet vertices() const;
};

/// Reusable breadth-first search with an optional vertex filter. Avoids
/// reallocating per search; results stay valid until the next run().
class Bfs {
 public:
  explicit Bfs(const Graph& graph);

  /// Visits vertices within `radius` of the sources, passing only through
  /// vertices with allowed[v] != 0 (all vertices when `allowed` is empty).
  /// Sources are visited even if not allowed. A negative radius is unbounded.
  const std::vector<Vertex>& run(std::span<const Vertex> sources, int radius,
                                 std::span<const char> allowed = {});
  const std::vector<Vertex>& run(Vertex source, int radius,
                                 std::span<const char> allowed = {}) {
    return run(std::span<const Vertex>(&source, 1), radius, allowed);
  }

  bool visited(Vertex v) const { return stamp_[v] == epoch_; }
  int dist(Vertex v) const { return visited(v) ? dist_[v] : kUnreached; }
  /// BFS parent of v in the last run (kNoVertex for sources).
  Vertex parent(Vertex v) const { return visited(v) ? parent_[v] : kNoVertex; }
  /// Visit order of the last run.
  const std::vector<Vertex>& order() const { return order_; }

 private:
  const Graph* graph_;
  std::vector<unsigned> stamp_;
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
  unsigned epoch_ = 0;
};

void require_vertex(const Graph& g, Vertex v);

DistanceProfile distance_profile(const Graph& g, Vertex source, int radius);
VertexSet ball(const Graph& g, Vertex v, int r);
VertexSet multi_source_ball(const Graph& g, const VertexSet& sources, int r);
int distance(const Graph& g, Vertex u, Vertex v);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& removed);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Same vertex set; uv is an edge iff 1 <= dist(u, v) <= r.
Graph power_graph(const Graph& g, int r);

int eccentricity(const Graph& g, Vertex v);

struct RadiusResult {
  int radius;
  Vertex center;
};
/// Minimum eccentricity; ties broken by smallest center id. Throws on
/// disconnected or empty input.
RadiusResult radius_of(const Graph& g);

/// Radius of g[vertices] measured from `center`, or kUnreached when some member
/// is not reachable inside the set.
int radius_from(const Graph& g, const VertexSet& vertices, Vertex center);

}  // namespace sparsity
