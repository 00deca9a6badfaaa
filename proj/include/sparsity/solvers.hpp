#pragma once

#include <optional>

#include "sparsity/graph.hpp"
#include "sparsity/orders.hpp"

namespace sparsity {

/// k candidates pairwise at distance > r, or nothing. Exact branching on
/// the highest remaining power-graph degree (smallest id on ties). With an
/// order, a distance-greedy pass may answer first when it already finds k
/// vertices; the decision is the same, the witness may differ.
std::optional<VertexSet> distance_independent_set(const Graph& g, int r, int k, const VertexSet& candidates,
                                                  const VertexOrder* order = nullptr);

enum class DominationMode { Exact, Greedy };

struct DominatingResult {
  VertexSet set;
  bool exact = false;
  /// Minimum size, when the graph is within the exact cap.
  std::optional<std::size_t> optimum;
};

/// A set D whose r-balls cover V(g). Exact mode: minimum by set-cover branch
/// and bound, capability error above `max_vertices`. Greedy mode: max new
/// coverage first (smallest id on ties).
DominatingResult distance_dominating_set(const Graph& g, int r, DominationMode mode, Vertex max_vertices = 25);

}  // namespace sparsity
