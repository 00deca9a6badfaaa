#include "sparsity/games.hpp"

#include <algorithm>
#include <unordered_map>

#include "bitset64.hpp"
#include "sparsity/error.hpp"
#include "sparsity/random.hpp"

namespace sparsity {

using detail::Mask;

const char* to_string(GameKind kind) { return kind == GameKind::Treedepth ? "treedepth" : "splitter"; }

GameKind parse_game_kind(const std::string& text) {
  if (text == "treedepth") return GameKind::Treedepth;
  if (text == "splitter") return GameKind::Splitter;
  throw Error(ErrorCode::Input, "unknown game kind '" + text + "' (expected treedepth or splitter)");
}

void GameConfig::validate() const {
  if (round_cap < 1) throw Error(ErrorCode::Input, "round cap must be at least 1");
  if (batch_limit < 1) throw Error(ErrorCode::Input, "batch limit must be at least 1");
  if (kind == GameKind::Splitter && r < 1) throw Error(ErrorCode::Input, "splitter game needs r >= 1");
}

std::vector<std::size_t> GameTranscript::residual_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& round : rounds) out.push_back(round.residual.size());
  return out;
}

namespace {

std::vector<char> mask_vector(Vertex n, const VertexSet& s) { return s.mask(n); }

// Vertices of `within` reachable from `from`, through `within` only.
VertexSet reach_within(const Graph& g, const VertexSet& within, Vertex from, int radius) {
  Bfs bfs(g);
  auto allowed = mask_vector(g.size(), within);
  auto order = bfs.run(from, radius, allowed);
  return VertexSet(std::vector<Vertex>(order.begin(), order.end()));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  std::vector<char> allowed = mask_vector(g.size(), within);
  Bfs bfs(g);
  for (Vertex v : within) {
    if (!allowed[v]) continue;
    auto order = bfs.run(v, -1, allowed);
    std::vector<Vertex> comp(order.begin(), order.end());
    for (Vertex w : comp) allowed[w] = 0;
    out.emplace_back(std::move(comp));
  }
  return out;
}

// Smallest-id vertex of a connected set minimizing eccentricity inside it.
Vertex center_of(const Graph& g, const VertexSet& set) {
  Vertex best = kNoVertex;
  int best_ecc = -1;
  for (Vertex c : set) {
    int e = radius_from(g, set, c);
    if (e == kUnreached) continue;
    if (best == kNoVertex || e < best_ecc) {
      best = c;
      best_ecc = e;
    }
  }
  return best;
}

std::string connector_violation(const Graph& g, const GameConfig& cfg, const VertexSet& residual,
                                const ConnectorMove& move) {
  if (move.vertices.empty()) return "connector chose an empty set";
  if (!move.vertices.is_subset_of(residual)) return "connector set leaves the residual graph";
  if (!move.vertices.contains(move.center)) return "connector center is not in the chosen set";
  int ecc = radius_from(g, move.vertices, move.center);
  if (ecc == kUnreached) return "connector set is not connected";
  if (cfg.kind == GameKind::Splitter) {
    if (ecc > cfg.r)
      return "connector set has eccentricity " + std::to_string(ecc) + " > r = " + std::to_string(cfg.r) +
             " around its center";
  } else {
    for (Vertex v : move.vertices)
      for (Vertex w : g.neighbors(v))
        if (residual.contains(w) && !move.vertices.contains(w))
          return "connector set is not a whole component";
  }
  return {};
}

// ------------------------------------------------------------ mask minimax

class MaskGame {
 public:
  MaskGame(const Graph& g, const GameConfig& cfg, Vertex cap, const char* who) : cfg_(cfg), n_(g.size()) {
    if (g.size() > cap) throw_cap_exceeded(who, g.size(), cap);
    if (g.size() > 20) throw_cap_exceeded(who, g.size(), 20);
    nbr_ = detail::neighbor_masks(g);
    if (cfg.kind == GameKind::Splitter) {
      legal_.assign(std::size_t{1} << n_, 0);
      for (Mask c = 1; c < (Mask{1} << n_); ++c) {
        int rad = detail::radius_in(nbr_, c);
        legal_[c] = rad >= 0 && rad <= cfg.r;
      }
    }
  }

  Vertex size() const { return n_; }
  Mask full() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }

  template <typename F>
  void for_each_move(Mask residual, F&& f) const {
    if (cfg_.kind == GameKind::Treedepth) {
      Mask rest = residual;
      while (rest) {
        Mask comp = detail::reach(nbr_, residual, detail::bit(detail::lowest(rest)));
        rest &= ~comp;
        f(comp);
      }
      return;
    }
    for (Mask c = residual; c; c = (c - 1) & residual)
      if (legal_[c]) f(c);
  }

  template <typename F>
  void for_each_deletion(Mask c, F&& f) const {
    if (cfg_.batch_limit >= detail::popcount(c)) {
      // Deleting everything ends the game; smaller deletions never do better.
      f(c);
      if (detail::popcount(c) > 1 || cfg_.batch_limit == 1) return;
    }
    if (cfg_.batch_limit == 1) {
      for (Mask m = c; m; m &= m - 1) f(m & -m);
      return;
    }
    for (Mask w = c; w; w = (w - 1) & c)
      if (detail::popcount(w) <= cfg_.batch_limit) f(w);
  }

  Vertex center(Mask c) const {
    int best = -1;
    Vertex at = kNoVertex;
    for (Mask m = c; m; m &= m - 1) {
      Vertex v = detail::lowest(m);
      int e = detail::eccentricity_in(nbr_, c, v);
      if (e >= 0 && (best < 0 || e < best)) {
        best = e;
        at = v;
      }
    }
    return at;
  }

  // Rounds needed from `residual` under optimal play.
  int value(Mask residual) {
    if (!residual) return 0;
    if (memo_.empty()) memo_.assign(std::size_t{1} << n_, -1);
    int& slot = memo_[residual];
    if (slot >= 0) return slot;
    int best = 0;
    for_each_move(residual, [&](Mask c) { best = std::max(best, response(c).second); });
    slot = best;
    return best;
  }

  // Splitter's optimal deletion against connector set c and the resulting
  // number of rounds (including this one).
  std::pair<Mask, int> response(Mask c) {
    Mask best_w = 0;
    int best = -1;
    for_each_deletion(c, [&](Mask w) {
      int v = 1 + value(c & ~w);
      bool better = best < 0 || v < best ||
                    (v == best && (detail::popcount(w) < detail::popcount(best_w) ||
                                   (detail::popcount(w) == detail::popcount(best_w) && w < best_w)));
      if (better) {
        best = v;
        best_w = w;
      }
    });
    return {best_w, best};
  }

  const GameConfig& config() const { return cfg_; }

 private:
  GameConfig cfg_;
  Vertex n_;
  std::vector<Mask> nbr_;
  std::vector<char> legal_;
  std::vector<int> memo_;
};

// ------------------------------------------------------------- splitters

class WcolSplitter final : public SplitterStrategy {
 public:
  explicit WcolSplitter(VertexOrder order) : order_(std::move(order)) {}
  std::string name() const override { return "wcol"; }
  bool positional() const override { return true; }
  VertexSet respond(const GameView& view, const ConnectorMove& move, GameRound&) override {
    if (order_.size() != view.graph.size())
      throw Error(ErrorCode::Input, "order size does not match the game graph");
    return VertexSet{order_.min_of(move.vertices)};
  }

 private:
  VertexOrder order_;
};

class UqwSplitter final : public SplitterStrategy {
 public:
  std::string name() const override { return "uqw"; }
  VertexSet respond(const GameView& view, const ConnectorMove& move, GameRound& round) override {
    const auto& history = view.history;
    if (history.empty()) return VertexSet{move.center};
    const Graph& g = view.graph;
    Bfs bfs(g);
    std::vector<Vertex> deleted;
    for (std::size_t j = 0; j < history.size(); ++j) {
      const ConnectorMove& earlier = history[j].connector;
      auto allowed = earlier.vertices.mask(g.size());
      bfs.run(earlier.center, -1, allowed);
      int d = bfs.dist(move.center);
      if (d == kUnreached || (view.config.kind == GameKind::Splitter && d > view.config.r))
        throw Error(ErrorCode::StrategyBug,
                    "round " + std::to_string(history.size() + 1) + ": center " + std::to_string(move.center) +
                        " is not within r of the center of round " + std::to_string(j + 1) + " inside its set");
      std::vector<Vertex> path;
      for (Vertex v = move.center; v != kNoVertex; v = bfs.parent(v)) path.push_back(v);
      std::reverse(path.begin(), path.end());
      for (Vertex v : path)
        if (move.vertices.contains(v)) deleted.push_back(v);
      round.paths.push_back(std::move(path));
    }
    VertexSet w(std::move(deleted));
    if (view.config.kind == GameKind::Splitter &&
        w.size() > history.size() * static_cast<std::size_t>(view.config.r + 1))
      throw Error(ErrorCode::StrategyBug, "batch of size " + std::to_string(w.size()) + " exceeds i*(r+1)");
    return w;
  }
};

class ExhaustiveSplitter final : public SplitterStrategy {
 public:
  explicit ExhaustiveSplitter(Vertex cap) : cap_(cap) {}
  std::string name() const override { return "exhaustive"; }
  bool positional() const override { return true; }
  void reset() override { game_.reset(); }
  VertexSet respond(const GameView& view, const ConnectorMove& move, GameRound&) override {
    if (!game_ || !(game_->config() == view.config) || graph_ != &view.graph) {
      game_ = std::make_unique<MaskGame>(view.graph, view.config, cap_, "exhaustive splitter");
      graph_ = &view.graph;
    }
    return detail::set_of(game_->response(detail::mask_of(move.vertices)).first);
  }

 private:
  Vertex cap_;
  const Graph* graph_ = nullptr;
  std::unique_ptr<MaskGame> game_;
};

class RandomSplitter final : public SplitterStrategy {
 public:
  explicit RandomSplitter(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "random"; }
  void reset() override { rng_ = Rng(seed_); }
  VertexSet respond(const GameView&, const ConnectorMove& move, GameRound&) override {
    return VertexSet{move.vertices[rng_.below(move.vertices.size())]};
  }

 private:
  std::uint64_t seed_;
  Rng rng_;
};

// ------------------------------------------------------------ connectors

class GreedyConnector final : public ConnectorStrategy {
 public:
  std::string name() const override { return "greedy"; }
  ConnectorMove choose(const GameView& view) override {
    const Graph& g = view.graph;
    if (view.config.kind == GameKind::Treedepth) {
      auto comps = components_within(g, view.residual);
      const VertexSet* best = &comps.front();
      for (const auto& c : comps)
        if (c.size() > best->size()) best = &c;
      return {center_of(g, *best), *best};
    }
    Bfs bfs(g);
    auto allowed = view.residual.mask(g.size());
    ConnectorMove best;
    for (Vertex c : view.residual) {
      const auto& order = bfs.run(c, view.config.r, allowed);
      if (order.size() > best.vertices.size())
        best = {c, VertexSet(std::vector<Vertex>(order.begin(), order.end()))};
    }
    return best;
  }
};

class RandomConnector final : public ConnectorStrategy {
 public:
  explicit RandomConnector(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  std::string name() const override { return "random"; }
  void reset() override { rng_ = Rng(seed_); }
  ConnectorMove choose(const GameView& view) override {
    const Graph& g = view.graph;
    if (view.config.kind == GameKind::Treedepth) {
      auto comps = components_within(g, view.residual);
      const VertexSet& pick = comps[rng_.below(comps.size())];
      return {center_of(g, pick), pick};
    }
    Vertex c = view.residual[rng_.below(view.residual.size())];
    int radius = static_cast<int>(rng_.below(static_cast<std::uint64_t>(view.config.r) + 1));
    return {c, reach_within(g, view.residual, c, radius)};
  }

 private:
  std::uint64_t seed_;
  Rng rng_;
};

class ExhaustiveConnector final : public ConnectorStrategy {
 public:
  explicit ExhaustiveConnector(Vertex cap) : cap_(cap) {}
  std::string name() const override { return "exhaustive"; }
  void bind(SplitterStrategy& opponent) override {
    if (!opponent.positional())
      throw Error(ErrorCode::Capability,
                  "exhaustive connector needs a splitter whose move depends only on the connector set; '" +
                      opponent.name() + "' does not");
    opponent_ = &opponent;
    game_.reset();
  }
  void reset() override { game_.reset(); }

  ConnectorMove choose(const GameView& view) override {
    if (!opponent_) throw Error(ErrorCode::Internal, "exhaustive connector used without an opponent");
    if (!game_ || graph_ != &view.graph || !(game_->config() == view.config)) {
      game_ = std::make_unique<MaskGame>(view.graph, view.config, cap_, "exhaustive connector");
      graph_ = &view.graph;
      memo_.assign(std::size_t{1} << view.graph.size(), -1);
      reply_.clear();
    }
    Mask residual = detail::mask_of(view.residual);
    Mask best_c = 0;
    int best = -1;
    game_->for_each_move(residual, [&](Mask c) {
      int v = 1 + rounds(view, c & ~reply(view, c));
      bool better = v > best || (v == best && (detail::popcount(c) > detail::popcount(best_c) ||
                                               (detail::popcount(c) == detail::popcount(best_c) && c < best_c)));
      if (better) {
        best = v;
        best_c = c;
      }
    });
    return {game_->center(best_c), detail::set_of(best_c)};
  }

 private:
  Mask reply(const GameView& view, Mask c) {
    auto it = reply_.find(c);
    if (it != reply_.end()) return it->second;
    static const std::vector<GameRound> kNoHistory;
    VertexSet set = detail::set_of(c);
    GameView fresh{view.graph, view.config, set, kNoHistory};
    GameRound scratch;
    ConnectorMove move{game_->center(c), set};
    Mask w = detail::mask_of(opponent_->respond(fresh, move, scratch));
    if (!w || (w & ~c))
      throw Error(ErrorCode::StrategyBug, "splitter '" + opponent_->name() + "' answered outside the connector set");
    reply_.emplace(c, w);
    return w;
  }

  // Rounds the opponent needs from `residual` when connector plays best.
  int rounds(const GameView& view, Mask residual) {
    if (!residual) return 0;
    int& slot = memo_[residual];
    if (slot >= 0) return slot;
    int best = 0;
    game_->for_each_move(residual, [&](Mask c) { best = std::max(best, 1 + rounds(view, c & ~reply(view, c))); });
    memo_[residual] = best;
    return best;
  }

  Vertex cap_;
  SplitterStrategy* opponent_ = nullptr;
  const Graph* graph_ = nullptr;
  std::unique_ptr<MaskGame> game_;
  std::vector<int> memo_;
  std::unordered_map<Mask, Mask> reply_;
};

}  // namespace

std::unique_ptr<SplitterStrategy> wcol_splitter_strategy(VertexOrder order) {
  return std::make_unique<WcolSplitter>(std::move(order));
}
std::unique_ptr<SplitterStrategy> uqw_splitter_strategy() { return std::make_unique<UqwSplitter>(); }
std::unique_ptr<SplitterStrategy> exhaustive_splitter_strategy(Vertex max_vertices) {
  return std::make_unique<ExhaustiveSplitter>(max_vertices);
}
std::unique_ptr<SplitterStrategy> random_splitter_strategy(std::uint64_t seed) {
  return std::make_unique<RandomSplitter>(seed);
}
std::unique_ptr<ConnectorStrategy> greedy_connector_strategy() { return std::make_unique<GreedyConnector>(); }
std::unique_ptr<ConnectorStrategy> random_connector_strategy(std::uint64_t seed) {
  return std::make_unique<RandomConnector>(seed);
}
std::unique_ptr<ConnectorStrategy> exhaustive_connector_strategy(Vertex max_vertices) {
  return std::make_unique<ExhaustiveConnector>(max_vertices);
}

GameTranscript play(const Graph& g, const GameConfig& config, SplitterStrategy& splitter,
                    ConnectorStrategy& connector) {
  config.validate();
  splitter.reset();
  connector.reset();
  connector.bind(splitter);

  GameTranscript t;
  t.config = config;
  t.graph_size = g.size();
  t.splitter_strategy = splitter.name();
  t.connector_strategy = connector.name();
  VertexSet residual = VertexSet::range(g.size());
  while (!residual.empty() && static_cast<int>(t.rounds.size()) < config.round_cap) {
    const std::string where = "round " + std::to_string(t.rounds.size() + 1) + ": ";
    GameView view{g, config, residual, t.rounds};
    GameRound round;
    round.connector = connector.choose(view);
    if (auto why = connector_violation(g, config, residual, round.connector); !why.empty())
      throw Error(ErrorCode::StrategyBug, where + why + " (connector '" + connector.name() + "')");
    round.splitter = splitter.respond(view, round.connector, round);
    if (round.splitter.empty() || !round.splitter.is_subset_of(round.connector.vertices))
      throw Error(ErrorCode::StrategyBug,
                  where + "splitter '" + splitter.name() + "' deleted vertices outside the connector set");
    if (round.splitter.size() > static_cast<std::size_t>(config.batch_limit))
      throw Error(ErrorCode::StrategyBug, where + "splitter '" + splitter.name() + "' deleted " +
                                              std::to_string(round.splitter.size()) + " vertices, batch limit is " +
                                              std::to_string(config.batch_limit));
    round.residual = round.connector.vertices.minus(round.splitter);
    residual = round.residual;
    t.rounds.push_back(std::move(round));
  }
  t.winner = residual.empty() ? Winner::Splitter : Winner::Connector;
  return t;
}

int game_value(const Graph& g, const GameConfig& config, Vertex max_vertices) {
  GameConfig cfg = config;
  cfg.round_cap = std::max(1, cfg.round_cap);
  cfg.validate();
  MaskGame game(g, cfg, max_vertices, "game_value");
  return game.value(game.full());
}

PathInvariantReport check_path_invariant(const Graph& g, const GameTranscript& t, const VertexSet& s,
                                         const std::vector<std::size_t>& rounds) {
  PathInvariantReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  std::vector<std::size_t> idx = rounds;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (std::size_t i : idx)
    if (i >= t.rounds.size()) {
      fail("round index " + std::to_string(i) + " out of range");
      return report;
    }

  // The chosen centers must be pairwise far apart once S is removed.
  Subgraph rest = delete_vertices(g, s);
  Bfs bfs(rest.graph);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    Vertex ca = t.rounds[idx[a]].connector.center;
    if (s.contains(ca)) {
      fail("center of round " + std::to_string(idx[a] + 1) + " lies in S");
      continue;
    }
    bfs.run(rest.local(ca), t.config.r);
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      Vertex cb = t.rounds[idx[b]].connector.center;
      if (!s.contains(cb) && bfs.visited(rest.local(cb)))
        fail("centers of rounds " + std::to_string(idx[a] + 1) + " and " + std::to_string(idx[b] + 1) +
             " are within distance r in G - S");
    }
  }
  if (!report.ok) return report;

  std::vector<VertexSet> paths;
  for (std::size_t p = 0; p + 1 < idx.size(); p += 2) {
    std::size_t first = idx[p], second = idx[p + 1];
    const auto& recorded = t.rounds[second].paths;
    if (first >= recorded.size()) {
      fail("round " + std::to_string(second + 1) + " has no recorded path to round " + std::to_string(first + 1));
      continue;
    }
    VertexSet path(recorded[first]);
    if (!path.intersects(s))
      fail("path from round " + std::to_string(first + 1) + " to round " + std::to_string(second + 1) +
           " avoids S");
    for (std::size_t q = 0; q < paths.size(); ++q)
      if (paths[q].intersects(path)) fail("paths " + std::to_string(q + 1) + " and " + std::to_string(paths.size() + 1) + " intersect");
    paths.push_back(std::move(path));
    ++report.pairs;
  }
  return report;
}

}  // namespace sparsity
