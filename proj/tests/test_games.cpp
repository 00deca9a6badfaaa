#include <doctest.h>

#include "oracles.hpp"
#include "sparsity/error.hpp"
#include "sparsity/games.hpp"
#include "sparsity/io.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/random.hpp"
#include "sparsity/validate.hpp"

using namespace sparsity;

namespace {

GameConfig treedepth_game(Vertex n) {
  GameConfig cfg;
  cfg.kind = GameKind::Treedepth;
  cfg.round_cap = std::max<Vertex>(1, n);
  return cfg;
}

GameConfig splitter_game(int r, int rounds, int batch = 1) {
  GameConfig cfg;
  cfg.kind = GameKind::Splitter;
  cfg.r = r;
  cfg.round_cap = rounds;
  cfg.batch_limit = batch;
  return cfg;
}

// Deletes nothing: always illegal.
class IdleSplitter : public SplitterStrategy {
 public:
  std::string name() const override { return "idle"; }
  VertexSet respond(const GameView&, const ConnectorMove&, GameRound&) override { return {}; }
};

// Claims a set that is not a ball around its center.
class CheatingConnector : public ConnectorStrategy {
 public:
  std::string name() const override { return "cheat"; }
  ConnectorMove choose(const GameView& view) override { return {view.residual[0], view.residual}; }
};

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(splitter_game(0, 1).validate(), Error);
  CHECK_THROWS_AS(splitter_game(1, 0).validate(), Error);
  CHECK_THROWS_AS(splitter_game(1, 1, 0).validate(), Error);
  CHECK_NOTHROW(treedepth_game(3).validate());
  CHECK(parse_game_kind("treedepth") == GameKind::Treedepth);
  CHECK_THROWS_AS(parse_game_kind("chess"), Error);
}

TEST_CASE("play examples") {
  Graph k5 = complete_graph(5);
  auto ex = exhaustive_splitter_strategy();
  auto co = exhaustive_connector_strategy();
  GameTranscript t = play(k5, treedepth_game(5), *ex, *co);
  CHECK(t.winner == Winner::Splitter);
  CHECK(t.rounds.size() == 5);
  CHECK(check_transcript(k5, t).ok);

  Graph one(1);
  for (GameConfig cfg : {treedepth_game(1), splitter_game(1, 1), splitter_game(3, 2, 2)}) {
    auto sp = wcol_splitter_strategy(VertexOrder::identity(1));
    auto gr = greedy_connector_strategy();
    GameTranscript single = play(one, cfg, *sp, *gr);
    CHECK(single.winner == Winner::Splitter);
    CHECK(single.rounds.size() == 1);
  }

  Graph p7 = path_graph(7);
  CHECK(oracle::treedepth(p7) == 3);
  GameTranscript tp = play(p7, treedepth_game(7), *ex, *co);
  CHECK(tp.winner == Winner::Splitter);
  CHECK(tp.rounds.size() == 3);
  CHECK(game_value(p7, treedepth_game(7)) == 3);
}

TEST_CASE("illegal moves are reported with the round") {
  Graph p5 = path_graph(5);
  IdleSplitter idle;
  auto greedy = greedy_connector_strategy();
  try {
    play(p5, splitter_game(1, 5), idle, *greedy);
    FAIL("expected a strategy error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StrategyBug);
    CHECK(std::string(e.what()).find("round 1") != std::string::npos);
  }
  CheatingConnector cheat;
  auto wcol = wcol_splitter_strategy(VertexOrder::identity(5));
  CHECK_THROWS_AS(play(p5, splitter_game(1, 5), *wcol, cheat), Error);
}

TEST_CASE("wcol splitter examples") {
  Graph k5 = complete_graph(5);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    Rng rng(seed);
    rng.shuffle(perm);
    VertexOrder order(perm);
    CHECK(wcol_of_order(k5, order, 2) == 5);
    std::vector<std::unique_ptr<ConnectorStrategy>> connectors;
    connectors.push_back(greedy_connector_strategy());
    connectors.push_back(random_connector_strategy(seed));
    connectors.push_back(exhaustive_connector_strategy());
    for (auto& co : connectors) {
      auto sp = wcol_splitter_strategy(order);
      GameTranscript t = play(k5, splitter_game(1, 5), *sp, *co);
      CHECK(t.winner == Winner::Splitter);
      CHECK(t.rounds.size() <= 5);
    }
  }
  Graph star = star_graph(9);
  VertexOrder center_first = VertexOrder::identity(10);
  CHECK(wcol_of_order(star, center_first, 2) == 2);
  std::vector<std::unique_ptr<ConnectorStrategy>> star_connectors;
  star_connectors.push_back(greedy_connector_strategy());
  star_connectors.push_back(random_connector_strategy(3));
  star_connectors.push_back(exhaustive_connector_strategy());
  for (auto& co : star_connectors) {
    auto sp = wcol_splitter_strategy(center_first);
    GameTranscript t = play(star, splitter_game(1, 2), *sp, *co);
    CHECK(t.winner == Winner::Splitter);
  }
  for (Vertex n : {5, 17, 33, 50}) {
    Graph p = path_graph(n);
    VertexOrder dfs = dfs_order(p);
    int bound = wcol_of_order(p, dfs, 4);
    CHECK(bound <= 5);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto sp = wcol_splitter_strategy(dfs);
      auto co = seed == 0 ? greedy_connector_strategy() : random_connector_strategy(seed);
      GameTranscript t = play(p, splitter_game(2, bound), *sp, *co);
      CHECK(t.winner == Winner::Splitter);
      CHECK(check_transcript(p, t).ok);
    }
  }
}

TEST_CASE("batch splitter examples") {
  Graph grid = grid_graph(5, 5);
  VertexOrder order = wcol_heuristic(grid, 2, OrderHeuristic::GreedyWReach).order;
  int cap = wcol_of_order(grid, order, 2);
  auto sp = uqw_splitter_strategy();
  auto co = greedy_connector_strategy();
  GameTranscript t = play(grid, splitter_game(1, cap, cap * 2), *sp, *co);
  CHECK(t.winner == Winner::Splitter);
  CHECK(check_transcript(grid, t).ok);
  REQUIRE_FALSE(t.rounds.empty());
  CHECK(t.rounds[0].splitter == VertexSet{t.rounds[0].connector.center});
  for (std::size_t i = 1; i < t.rounds.size(); ++i) CHECK(t.rounds[i].splitter.size() <= i * 2);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_gnd(25, 3, seed);
    for (int r = 1; r <= 2; ++r) {
      int rounds = g.size();
      auto batch = uqw_splitter_strategy();
      auto rnd = random_connector_strategy(seed);
      GameTranscript bt = play(g, splitter_game(r, rounds, rounds * (r + 1)), *batch, *rnd);
      CHECK(check_transcript(g, bt).ok);
      for (std::size_t i = 1; i < bt.rounds.size(); ++i)
        CHECK(bt.rounds[i].splitter.size() <= i * static_cast<std::size_t>(r + 1));
    }
  }
}

TEST_CASE("batch play satisfies the disjoint paths invariant") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = random_gnd(30, 3, seed + 40);
    const int r = 1 + static_cast<int>(seed % 2);
    auto batch = uqw_splitter_strategy();
    auto rnd = random_connector_strategy(seed);
    GameTranscript t = play(g, splitter_game(r, 8, 8 * (r + 1)), *batch, *rnd);
    // S = everything the splitter deleted; I = rounds whose centers are far apart in G - S
    VertexSet s;
    for (const auto& round : t.rounds) s = s.united(round.splitter);
    std::vector<Vertex> centers;
    for (const auto& round : t.rounds) centers.push_back(round.connector.center);
    auto alive = oracle::alive_without(g, s);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (s.contains(centers[i])) continue;
      auto d = oracle::bfs(g, centers[i], alive);
      bool far = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return d[centers[j]] > r; });
      if (far) chosen.push_back(i);
    }
    PathInvariantReport rep = check_path_invariant(g, t, s, chosen);
    CHECK(rep.ok);
  }
}

TEST_CASE("game values") {
  CHECK(game_value(Graph(4), treedepth_game(4)) == 1);
  for (Vertex n = 1; n <= 6; ++n) CHECK(game_value(complete_graph(n), splitter_game(1, n)) == n);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_gnd(static_cast<Vertex>(3 + seed % 6), 2.5, seed);
    CHECK(game_value(g, treedepth_game(g.size())) == oracle::treedepth(g));
  }
  CHECK_THROWS_AS(game_value(path_graph(11), treedepth_game(11)), Error);
}

TEST_CASE("batch splitter never needs more rounds than the simple game") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_gnd(9, 3, seed);
    for (int r = 1; r <= 2; ++r) {
      int simple = game_value(g, splitter_game(r, g.size(), 1));
      int batch = game_value(g, splitter_game(r, g.size(), 3));
      CHECK(batch <= simple);
    }
  }
}

TEST_CASE("exhaustive connector needs a positional opponent") {
  auto batch = uqw_splitter_strategy();
  auto co = exhaustive_connector_strategy();
  CHECK_THROWS_AS(play(path_graph(4), splitter_game(1, 4, 8), *batch, *co), Error);
}

TEST_CASE("transcript checker catches tampering") {
  Graph g = grid_graph(3, 3);
  auto sp = wcol_splitter_strategy(VertexOrder::identity(9));
  auto co = greedy_connector_strategy();
  GameTranscript t = play(g, splitter_game(1, 9), *sp, *co);
  REQUIRE(check_transcript(g, t).ok);
  GameTranscript wrong_residual = t;
  wrong_residual.rounds[0].residual = wrong_residual.rounds[0].residual.minus({wrong_residual.rounds[0].residual[0]});
  CHECK_FALSE(check_transcript(g, wrong_residual).ok);
  GameTranscript wrong_winner = t;
  wrong_winner.winner = Winner::Connector;
  CHECK_FALSE(check_transcript(g, wrong_winner).ok);
  GameTranscript big_batch = t;
  big_batch.rounds[0].splitter = big_batch.rounds[0].connector.vertices;
  CHECK_FALSE(check_transcript(g, big_batch).ok);
}
