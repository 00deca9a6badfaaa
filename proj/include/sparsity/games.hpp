#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/orders.hpp"

namespace sparsity {

enum class GameKind { Treedepth, Splitter };

const char* to_string(GameKind kind);
GameKind parse_game_kind(const std::string& text);

/// kind = Treedepth: connector must pick a whole component of the residual
/// (r is ignored). kind = Splitter: connector picks a connected set whose
/// induced subgraph has radius <= r around the claimed center.
struct GameConfig {
  GameKind kind = GameKind::Splitter;
  int r = 1;
  int round_cap = 1;
  int batch_limit = 1;

  /// Throws ErrorCode::Input on out-of-range fields.
  void validate() const;
  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

struct ConnectorMove {
  Vertex center = kNoVertex;
  VertexSet vertices;
  friend bool operator==(const ConnectorMove&, const ConnectorMove&) = default;
};

struct GameRound {
  ConnectorMove connector;
  VertexSet splitter;
  /// Vertices left after this round: connector.vertices minus splitter.
  VertexSet residual;
  /// uqw_paths only: the center-to-center paths whose union was deleted,
  /// paths[j] joins the center of round j to this round's center.
  std::vector<std::vector<Vertex>> paths;
  friend bool operator==(const GameRound&, const GameRound&) = default;
};

enum class Winner { Splitter, Connector };

struct GameTranscript {
  GameConfig config;
  Vertex graph_size = 0;
  std::string splitter_strategy;
  std::string connector_strategy;
  std::vector<GameRound> rounds;
  Winner winner = Winner::Connector;

  std::vector<std::size_t> residual_sizes() const;
  friend bool operator==(const GameTranscript&, const GameTranscript&) = default;
};

/// Splitter's view of the play so far.
struct GameView {
  const Graph& graph;
  const GameConfig& config;
  const VertexSet& residual;
  const std::vector<GameRound>& history;
};

class SplitterStrategy {
 public:
  virtual ~SplitterStrategy() = default;
  virtual std::string name() const = 0;
  /// True when the move depends only on the connector move, which lets the
  /// exhaustive connector compute a best response.
  virtual bool positional() const { return false; }
  virtual void reset() {}
  /// Returns the deleted set; may also fill round.paths.
  virtual VertexSet respond(const GameView& view, const ConnectorMove& move, GameRound& round) = 0;
};

class ConnectorStrategy {
 public:
  virtual ~ConnectorStrategy() = default;
  virtual std::string name() const = 0;
  virtual void reset() {}
  virtual ConnectorMove choose(const GameView& view) = 0;
  /// Called once before play with the opponent.
  virtual void bind(SplitterStrategy& /*opponent*/) {}
};

/// Deletes the order-minimum of connector's set.
std::unique_ptr<SplitterStrategy> wcol_splitter_strategy(VertexOrder order);
/// Batch strategy: deletes {v_1} first, then the union of short paths from
/// all earlier centers to the new center, intersected with the new set.
std::unique_ptr<SplitterStrategy> uqw_splitter_strategy();
/// Optimal play by memoized minimax over residual vertex masks.
std::unique_ptr<SplitterStrategy> exhaustive_splitter_strategy(Vertex max_vertices = 10);
std::unique_ptr<SplitterStrategy> random_splitter_strategy(std::uint64_t seed);

/// Largest radius-r ball (smallest center on ties); treedepth kind: largest
/// component (smallest member on ties).
std::unique_ptr<ConnectorStrategy> greedy_connector_strategy();
std::unique_ptr<ConnectorStrategy> random_connector_strategy(std::uint64_t seed);
/// Best response against a positional splitter, by exhaustive search.
/// Capability error above `max_vertices` or against a non-positional
/// opponent.
std::unique_ptr<ConnectorStrategy> exhaustive_connector_strategy(Vertex max_vertices = 10);

/// Plays to completion. Every move is validated before it is applied; an
/// illegal move throws ErrorCode::StrategyBug naming the round.
GameTranscript play(const Graph& g, const GameConfig& config, SplitterStrategy& splitter,
                    ConnectorStrategy& connector);

/// Rounds splitter needs under optimal play on both sides (no round cap).
/// Capability error above `max_vertices`.
int game_value(const Graph& g, const GameConfig& config, Vertex max_vertices = 10);

/// Checks the disjoint-paths argument behind the batch strategy on a
/// finished uqw_paths play: given S and a set I of rounds whose centers are
/// pairwise at distance > r in G - S, the paths joining consecutive pairs of
/// I must each meet S and be pairwise disjoint.
struct PathInvariantReport {
  bool ok = true;
  std::size_t pairs = 0;
  std::vector<std::string> violations;
};
PathInvariantReport check_path_invariant(const Graph& g, const GameTranscript& t, const VertexSet& s,
                                         const std::vector<std::size_t>& rounds);

}  // namespace sparsity
