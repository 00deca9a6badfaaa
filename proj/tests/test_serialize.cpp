#include <doctest.h>

#include "sparsity/error.hpp"
#include "sparsity/games.hpp"
#include "sparsity/io.hpp"
#include "sparsity/serialize.hpp"
#include "sparsity/validate.hpp"

using namespace sparsity;

TEST_CASE("schema instances") {
  CHECK(emit_json(to_json(VertexOrder::identity(3))) == R"({"order":[0,1,2]})");
  Cover c = neighborhood_cover(path_graph(4), 1, VertexOrder::identity(4));
  Json j = to_json(c);
  CHECK(j.contains("clusters"));
  CHECK(j.contains("radius"));
  CHECK(j.contains("max_degree"));
  std::string text = emit_json(j);
  CHECK(text.find("\"clusters\"") < text.find("\"max_degree\""));
}

TEST_CASE("round trips") {
  Graph g = grid_graph(3, 4);
  auto sp = wcol_splitter_strategy(VertexOrder::identity(12));
  auto co = greedy_connector_strategy();
  GameConfig cfg;
  cfg.r = 1;
  cfg.round_cap = 12;
  GameTranscript t = play(g, cfg, *sp, *co);
  CHECK(transcript_from_json(Json::parse(emit_json(to_json(t)))) == t);

  auto batch = uqw_splitter_strategy();
  cfg.batch_limit = 24;
  GameTranscript bt = play(g, cfg, *batch, *co);
  CHECK(transcript_from_json(to_json(bt)) == bt);

  TreedepthResult td = treedepth_exact(path_graph(6));
  CHECK(forest_from_json(to_json(td.forest)).parent == td.forest.parent);

  UqwCertificate u = uqw_extract(g, VertexSet::range(12), 1, 2, VertexOrder::identity(12));
  UqwCertificate u2 = uqw_from_json(to_json(u));
  CHECK(u2.s == u.s);
  CHECK(u2.b == u.b);
  CHECK(u2.method == u.method);
  CHECK(u2.guarantee_met == u.guarantee_met);

  SeparatorCertificate s = balanced_separator(g, VertexSet::range(12), 1, 0.3, VertexOrder::identity(12));
  SeparatorCertificate s2 = separator_from_json(to_json(s));
  CHECK(s2.s == s.s);
  CHECK(s2.steps.size() == s.steps.size());
  CHECK(s2.worst_ball_fraction == s.worst_ball_fraction);

  Cover c = neighborhood_cover(g, 1, VertexOrder::identity(12));
  Cover c2 = cover_from_json(to_json(c));
  CHECK(c2.home == c.home);
  CHECK(c2.clusters.size() == c.clusters.size());
  CHECK(check_cover(g, c2, std::nullopt).ok);

  PartitionCover p = partition_cover(g, 1, VertexOrder::identity(12));
  PartitionCover p2 = partition_from_json(to_json(p));
  CHECK(p2.parts == p.parts);
  CHECK(p2.color == p.color);

  MinorModel m;
  m.depth = 1;
  m.branch_sets = {{0, 1}, {2}};
  m.edge_witness = {{1, 2}};
  MinorModel m2 = minor_model_from_json(to_json(m));
  CHECK(m2.branch_sets == m.branch_sets);
  CHECK(m2.edge_witness == m.edge_witness);
}

TEST_CASE("malformed documents are parse errors") {
  try {
    transcript_from_json(Json::parse(R"({"rounds": 3})"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"order":[0,0]})")), Error);
  CHECK_THROWS_AS(vertex_set_from_json(Json::parse(R"("x")")), Error);
}
