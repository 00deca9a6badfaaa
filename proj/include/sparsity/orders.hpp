#pragma once

#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

/// A linear order of the vertex set: perm[i] is the vertex at position i and
/// rank(v) its position. Smaller rank means smaller in the order.
class VertexOrder {
 public:
  VertexOrder() = default;
  /// Throws ErrorCode::Validation unless perm is a permutation of 0..n-1.
  explicit VertexOrder(std::vector<Vertex> perm);
  static VertexOrder identity(Vertex n);

  Vertex size() const { return static_cast<Vertex>(perm_.size()); }
  Vertex at(Vertex position) const { return perm_[position]; }
  Vertex rank(Vertex v) const { return rank_[v]; }
  bool less(Vertex u, Vertex v) const { return rank_[u] < rank_[v]; }
  const std::vector<Vertex>& perm() const { return perm_; }
  const std::vector<Vertex>& ranks() const { return rank_; }

  /// The order-minimum of a nonempty set.
  Vertex min_of(const VertexSet& s) const;

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<Vertex> perm_;
  std::vector<Vertex> rank_;
};

/// WReach_r[G, order, v] for every v. Each set contains v itself.
struct WReachTable {
  int radius = 0;
  VertexOrder order;
  std::vector<VertexSet> sets;

  std::size_t max_size() const;
};

WReachTable wreach_table(const Graph& g, const VertexOrder& order, int r);
/// Sizes only; cheaper than the full table.
std::vector<int> wreach_sizes(const Graph& g, const VertexOrder& order, int r);
int wcol_of_order(const Graph& g, const VertexOrder& order, int r);

struct OrderResult {
  int value = 0;
  VertexOrder order;
};

/// Exact wcol_r by branch and bound over order prefixes. Throws
/// ErrorCode::Capability when g has more than `max_vertices` vertices.
OrderResult wcol_exact(const Graph& g, int r, Vertex max_vertices = 10);

enum class OrderHeuristic { Degeneracy, GreedyWReach };

/// A heuristic order and its exact wcol_r value.
OrderResult wcol_heuristic(const Graph& g, int r, OrderHeuristic strategy);

/// col(g) = degeneracy + 1 with the reversed min-degree removal order.
OrderResult coloring_number(const Graph& g);

/// DFS preorder, components started from their smallest vertex and
/// neighbors explored in ascending id order.
VertexOrder dfs_order(const Graph& g);

/// Rooted forest on V(g); parent[v] == kNoVertex marks a root.
struct EliminationForest {
  std::vector<Vertex> parent;

  /// Number of vertices on the longest root-to-node path.
  int depth() const;
  /// Ancestors first (roots by id, then children by id, depth-first).
  VertexOrder topological_order() const;
  /// True when acyclic and every edge of g joins an ancestor/descendant pair.
  bool is_elimination_forest_of(const Graph& g) const;
};

struct TreedepthResult {
  int value = 0;
  EliminationForest forest;
};

/// Exact treedepth by memoized recursion td(G) = 1 + min_v td(G - v) over
/// connected vertex subsets. Capability error above `max_vertices`.
TreedepthResult treedepth_exact(const Graph& g, Vertex max_vertices = 15);

/// Checks by path enumeration that every u-v path of length <= r meets
/// WReach_r[v] and WReach_r[u]. Requires u != v and u not in WReach_r[v]
/// (ErrorCode::Precondition otherwise).
bool check_separation(const Graph& g, const VertexOrder& order, int r, Vertex u, Vertex v);

}  // namespace sparsity
