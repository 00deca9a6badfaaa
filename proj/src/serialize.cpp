#include "sparsity/serialize.hpp"

#include "sparsity/error.hpp"

namespace sparsity {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [a, b] : edges) out.push_back({a, b});
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return out;
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.members()); }

VertexSet vertex_set_from_json(const Json& j) {
  return guarded("vertex set", [&] { return VertexSet(j.get<std::vector<Vertex>>()); });
}

Json to_json(const VertexOrder& order) { return Json{{"order", order.perm()}}; }

VertexOrder order_from_json(const Json& j) {
  return guarded("order", [&] {
    const Json& arr = j.is_object() ? j.at("order") : j;
    return VertexOrder(arr.get<std::vector<Vertex>>());
  });
}

Json to_json(const WReachTable& table) {
  Json sets = Json::array();
  for (const auto& s : table.sets) sets.push_back(to_json(s));
  return Json{{"r", table.radius}, {"order", table.order.perm()}, {"sets", sets}};
}

Json to_json(const EliminationForest& forest) {
  Json parent = Json::array();
  for (Vertex p : forest.parent) parent.push_back(p == kNoVertex ? Json(nullptr) : Json(p));
  return Json{{"parent", parent}, {"depth", forest.depth()}};
}

EliminationForest forest_from_json(const Json& j) {
  return guarded("forest", [&] {
    EliminationForest f;
    for (const auto& p : j.at("parent")) f.parent.push_back(p.is_null() ? kNoVertex : p.get<Vertex>());
    return f;
  });
}

Json to_json(const MinorModel& model) {
  Json sets = Json::array();
  for (const auto& s : model.branch_sets) sets.push_back(to_json(s));
  return Json{{"depth", model.depth}, {"branch_sets", sets}, {"edge_witness", edges_json(model.edge_witness)}};
}

MinorModel minor_model_from_json(const Json& j) {
  return guarded("minor model", [&] {
    MinorModel m;
    m.depth = j.at("depth").get<int>();
    for (const auto& s : j.at("branch_sets")) m.branch_sets.push_back(vertex_set_from_json(s));
    m.edge_witness = edges_from(j.at("edge_witness"));
    return m;
  });
}

Json to_json(const GameTranscript& t) {
  Json rounds = Json::array();
  for (const auto& round : t.rounds) {
    Json r{{"center", round.connector.center},
           {"connector", to_json(round.connector.vertices)},
           {"splitter", to_json(round.splitter)},
           {"residual", to_json(round.residual)}};
    if (!round.paths.empty()) r["paths"] = round.paths;
    rounds.push_back(std::move(r));
  }
  return Json{{"config",
               {{"kind", to_string(t.config.kind)},
                {"r", t.config.r},
                {"round_cap", t.config.round_cap},
                {"batch_limit", t.config.batch_limit}}},
              {"graph_size", t.graph_size},
              {"splitter_strategy", t.splitter_strategy},
              {"connector_strategy", t.connector_strategy},
              {"rounds", rounds},
              {"residual_sizes", t.residual_sizes()},
              {"winner", t.winner == Winner::Splitter ? "splitter" : "connector"}};
}

GameTranscript transcript_from_json(const Json& j) {
  return guarded("transcript", [&] {
    GameTranscript t;
    const Json& c = j.at("config");
    t.config.kind = parse_game_kind(c.at("kind").get<std::string>());
    t.config.r = c.at("r").get<int>();
    t.config.round_cap = c.at("round_cap").get<int>();
    t.config.batch_limit = c.at("batch_limit").get<int>();
    t.graph_size = j.at("graph_size").get<Vertex>();
    t.splitter_strategy = j.value("splitter_strategy", "");
    t.connector_strategy = j.value("connector_strategy", "");
    for (const auto& r : j.at("rounds")) {
      GameRound round;
      round.connector.center = r.at("center").get<Vertex>();
      round.connector.vertices = vertex_set_from_json(r.at("connector"));
      round.splitter = vertex_set_from_json(r.at("splitter"));
      round.residual = vertex_set_from_json(r.at("residual"));
      if (r.contains("paths")) round.paths = r.at("paths").get<std::vector<std::vector<Vertex>>>();
      t.rounds.push_back(std::move(round));
    }
    std::string w = j.at("winner").get<std::string>();
    if (w != "splitter" && w != "connector") throw Error(ErrorCode::Parse, "unknown winner '" + w + "'");
    t.winner = w == "splitter" ? Winner::Splitter : Winner::Connector;
    return t;
  });
}

Json to_json(const UqwCertificate& cert) {
  return Json{{"r", cert.r},
              {"m", cert.m},
              {"A", to_json(cert.a)},
              {"S", to_json(cert.s)},
              {"B", to_json(cert.b)},
              {"c", cert.c},
              {"precondition_met", cert.precondition_met},
              {"guarantee_met", cert.guarantee_met},
              {"method", cert.method}};
}

UqwCertificate uqw_from_json(const Json& j) {
  return guarded("uqw certificate", [&] {
    UqwCertificate c;
    c.r = j.at("r").get<int>();
    c.m = j.at("m").get<std::size_t>();
    c.a = vertex_set_from_json(j.at("A"));
    c.s = vertex_set_from_json(j.at("S"));
    c.b = vertex_set_from_json(j.at("B"));
    c.c = j.value("c", 0);
    c.precondition_met = j.value("precondition_met", false);
    c.guarantee_met = j.value("guarantee_met", false);
    c.method = j.value("method", "");
    return c;
  });
}

Json to_json(const SeparatorCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"x", s.x_size}, {"y", s.y_size}, {"x_prime", s.x_prime},
                     {"x_double_prime", s.x_double_prime}, {"z", s.z_size}});
  return Json{{"r", cert.r},
              {"epsilon", cert.epsilon},
              {"A", to_json(cert.a)},
              {"S", to_json(cert.s)},
              {"worst_ball_fraction", cert.worst_ball_fraction},
              {"steps", steps},
              {"stop_reason", cert.stop_reason}};
}

SeparatorCertificate separator_from_json(const Json& j) {
  return guarded("separator certificate", [&] {
    SeparatorCertificate c;
    c.r = j.at("r").get<int>();
    c.epsilon = j.at("epsilon").get<double>();
    c.a = vertex_set_from_json(j.at("A"));
    c.s = vertex_set_from_json(j.at("S"));
    c.worst_ball_fraction = j.at("worst_ball_fraction").get<double>();
    if (j.contains("steps"))
      for (const auto& s : j.at("steps"))
        c.steps.push_back({s.at("x").get<std::size_t>(), s.at("y").get<std::size_t>(),
                           s.at("x_prime").get<std::size_t>(), s.at("x_double_prime").get<std::size_t>(),
                           s.at("z").get<std::size_t>()});
    c.stop_reason = j.value("stop_reason", "");
    return c;
  });
}

Json to_json(const Cover& cover) {
  Json clusters = Json::array();
  Json centers = Json::array();
  for (const auto& c : cover.clusters) {
    clusters.push_back(to_json(c.members));
    centers.push_back(c.center);
  }
  return Json{{"r", cover.r},          {"radius", cover.radius_bound}, {"clusters", clusters},
              {"centers", centers},    {"home", cover.home},           {"max_degree", cover.max_degree}};
}

Cover cover_from_json(const Json& j) {
  return guarded("cover", [&] {
    Cover c;
    c.r = j.at("r").get<int>();
    c.radius_bound = j.at("radius").get<int>();
    const Json& clusters = j.at("clusters");
    const Json& centers = j.at("centers");
    if (clusters.size() != centers.size()) throw Error(ErrorCode::Parse, "cover: clusters and centers differ in length");
    for (std::size_t i = 0; i < clusters.size(); ++i)
      c.clusters.push_back({centers[i].get<Vertex>(), vertex_set_from_json(clusters[i])});
    if (j.contains("home")) c.home = j.at("home").get<std::vector<std::size_t>>();
    c.max_degree = j.at("max_degree").get<int>();
    return c;
  });
}

Json to_json(const PartitionCover& pc) {
  Json parts = Json::array();
  for (const auto& p : pc.parts) parts.push_back(to_json(p));
  return Json{{"r", pc.r}, {"parts", parts}, {"colors", pc.color}, {"count", pc.count()}};
}

PartitionCover partition_from_json(const Json& j) {
  return guarded("partition cover", [&] {
    PartitionCover pc;
    pc.r = j.at("r").get<int>();
    for (const auto& p : j.at("parts")) pc.parts.push_back(vertex_set_from_json(p));
    if (j.contains("colors")) pc.color = j.at("colors").get<std::vector<int>>();
    return pc;
  });
}

std::string emit_json(const Json& j) { return j.dump(); }

}  // namespace sparsity
