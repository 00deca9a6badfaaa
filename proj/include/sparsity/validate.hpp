#pragma once

// Definition-level checks of every certificate the toolkit produces. They
// use their own breadth-first searches and never call the constructions.

#include <optional>
#include <string>
#include <vector>

#include "sparsity/games.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/wideness.hpp"

namespace sparsity {

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string why) {
    ok = false;
    violations.push_back(std::move(why));
  }
};

/// WReach_r by checking, for every pair u <= v, whether v reaches u within r
/// steps inside {u} ∪ {w : w > u}.
std::vector<VertexSet> reference_wreach(const Graph& g, const VertexOrder& order, int r);
int reference_wcol(const Graph& g, const VertexOrder& order, int r);

Verdict check_order_value(const Graph& g, const VertexOrder& order, int r, int claimed);
Verdict check_elimination_forest(const Graph& g, const EliminationForest& forest, int claimed_depth);

/// B ⊆ A \ S, S ∩ B = ∅, B pairwise at distance > r in G - S; with
/// `require_guarantee`, also |S| <= c and |B| >= m.
Verdict check_uqw(const Graph& g, const UqwCertificate& cert, bool require_guarantee);

/// Recomputes every r-ball in G - S; the worst fraction must be at most eps
/// and match the reported value.
Verdict check_separator(const Graph& g, const SeparatorCertificate& cert);

/// Every ball(v, r) inside some cluster, clusters connected with radius at
/// most radius_bound around their center, reported max degree exact and at
/// most `degree_bound` when given.
Verdict check_cover(const Graph& g, const Cover& cover, std::optional<int> degree_bound);

/// Every ball(v, r) inside some part, every component of every part has
/// radius at most 2r, and the part count is at most `count_bound` when given.
Verdict check_partition(const Graph& g, const PartitionCover& pc, std::optional<int> count_bound);

/// Replays the rules: legal connector sets, splitter sets inside them within
/// the batch limit, residuals, round cap, and the declared winner.
Verdict check_transcript(const Graph& g, const GameTranscript& t);

}  // namespace sparsity
