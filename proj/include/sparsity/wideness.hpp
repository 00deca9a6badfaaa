#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/orders.hpp"

namespace sparsity {

/// S is deleted; B ⊆ A \ S is distance-r independent in G - S.
struct UqwCertificate {
  int r = 1;
  std::size_t m = 0;
  VertexSet a;
  VertexSet s;
  VertexSet b;
  /// wcol_r of the order used; the guaranteed bound on |S|.
  int c = 0;
  /// |A| >= 4 (2cm)^c held.
  bool precondition_met = false;
  /// |S| <= c and |B| >= m.
  bool guarantee_met = false;
  /// "direct" (S empty), "frequent" (frequent weak-reachability threshold)
  /// or "sunflower" (common core of weak-reachability sets).
  std::string method;
};

struct UqwOptions {
  /// Keep adding to B after it reaches m.
  bool maximize = false;
};

/// Candidates from every extraction route, each already checked for distance
/// independence. Never empty for nonempty A.
std::vector<UqwCertificate> uqw_candidates(const Graph& g, const VertexSet& a, int r, std::size_t m,
                                           const VertexOrder& order, UqwOptions options = {});

/// The best candidate: one reaching m with the smallest S, else the largest B.
UqwCertificate uqw_extract(const Graph& g, const VertexSet& a, int r, std::size_t m, const VertexOrder& order,
                           UqwOptions options = {});

/// Exhaustive: over all S with |S| <= s_max, a maximum distance-r
/// independent B ⊆ A \ S in G - S. Returns the certificate with the largest
/// B (smallest S on ties) if it reaches m.
std::optional<UqwCertificate> uqw_brute(const Graph& g, const VertexSet& a, int r, std::size_t m, int s_max,
                                        Vertex max_vertices = 18);

/// 4 (2cm)^c, saturating at the largest double.
double uqw_threshold(int c, std::size_t m);

struct SeparatorStep {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t x_prime = 0;
  std::size_t x_double_prime = 0;
  std::size_t z_size = 0;
};

struct SeparatorCertificate {
  int r = 1;
  double epsilon = 1.0;
  VertexSet a;
  VertexSet s;
  double worst_ball_fraction = 0.0;
  std::vector<SeparatorStep> steps;
  /// "target" when |X| reached the target size, "stalled" when no exchange
  /// shrank X any more.
  std::string stop_reason;
};

struct SeparatorOptions {
  /// Stop once |X| <= target_size.
  std::size_t target_size = 0;
  /// Throw ErrorCode::AlgorithmStall instead of returning when an exchange
  /// fails to shrink X.
  bool stall_is_error = false;
  /// After the loop, drop separator vertices (largest id first) whose
  /// removal keeps every ball within the bound.
  bool prune = true;
};

/// Exchange loop: from X = V(G), repeatedly take a distance-4r independent
/// X' ⊆ X in G - Y, keep X'' ⊆ X' of vertices whose 2r-ball in G - Y holds
/// at most eps|A| vertices of A, and replace X by (X \ X'') ∪ Y. The
/// separator property is checked after every step.
SeparatorCertificate balanced_separator(const Graph& g, const VertexSet& a, int r, double epsilon,
                                        const VertexOrder& order, SeparatorOptions options = {});

/// max over v outside S of |N_r^{G-S}(v) ∩ A| / |A|.
double worst_ball_fraction(const Graph& g, const VertexSet& a, const VertexSet& s, int r);

struct Cluster {
  Vertex center = kNoVertex;
  VertexSet members;
};

struct Cover {
  int r = 0;
  int radius_bound = 0;
  std::vector<Cluster> clusters;
  /// Index into clusters of a cluster containing ball(v, r).
  std::vector<std::size_t> home;
  int max_degree = 0;
};

/// Clusters X_2r[m(v)] = {w : m(v) ∈ WReach_2r[w]} for m(v) the order-minimum
/// of ball(v, r), one per distinct m(v), sorted by center.
Cover neighborhood_cover(const Graph& g, int r, const VertexOrder& order);

struct PartitionCover {
  int r = 0;
  std::vector<int> color;
  std::vector<VertexSet> parts;
  std::size_t count() const { return parts.size(); }
};

/// Greedy coloring along the order where u ∈ WReach_{4r+1}[v] forces
/// different colors; part i is the union of X_2r[u] over u of color i.
PartitionCover partition_cover(const Graph& g, int r, const VertexOrder& order);

}  // namespace sparsity
