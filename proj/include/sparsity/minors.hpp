#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

/// A depth-r minor model of h in g: one branch set per vertex of h and one
/// witness edge of g per edge of h (aligned with h.edges()).
struct MinorModel {
  int depth = 0;
  std::vector<VertexSet> branch_sets;
  std::vector<Edge> edge_witness;
};

struct MinorCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks disjointness, connectivity, radius <= model.depth for each branch
/// set, and that each witness edge is an edge of g joining the right sets.
MinorCheck verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model);

struct MinorSearchLimits {
  Vertex max_pattern_vertices = 5;
  Vertex max_host_vertices = 20;
};

/// Exhaustive search for h as a depth-r minor of g. Complete within the caps
/// (ErrorCode::Capability beyond them); every returned model is verified.
std::optional<MinorModel> find_depth_r_minor(const Graph& g, const Graph& h, int r,
                                             MinorSearchLimits limits = {});

bool has_shallow_clique(const Graph& g, Vertex m, int r, MinorSearchLimits limits = {});

/// Best depth-r minor density found by randomized contraction. The value is
/// a lower bound on the densest depth-r minor, never an estimate of it.
struct DensityReport {
  int depth = 0;
  double density = 0.0;
  Graph minor;
  MinorModel model;
  int attempts = 0;
  std::uint64_t seed = 0;
};

DensityReport density_report(const Graph& g, int r, int budget, std::uint64_t seed);

}  // namespace sparsity
