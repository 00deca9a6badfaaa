#include <doctest.h>

#include "sparsity/commands.hpp"
#include "sparsity/error.hpp"
#include "sparsity/io.hpp"

using namespace sparsity;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

void certificate_verifies(const Graph& g, const Json& env) {
  REQUIRE(env.contains("certificate"));
  if (env["certificate"].is_null()) return;
  Json v = verify_certificate(g, env["certificate"]);
  CHECK_MESSAGE(v["verified"] == true, env["command"].get<std::string>() << ": " << v.dump());
}

}  // namespace

TEST_CASE("envelopes carry the reproducibility fields") {
  Graph p5 = path_graph(5);
  Json env = run_command(p5, "wcol", {{"r", 2}, {"mode", "exact"}});
  CHECK(env["result"]["value"] == 3);
  CHECK(env["params"]["mode"] == "exact");
  CHECK(env["params"]["cap"] == 10);
  CHECK(env["input"]["n"] == 5);
  CHECK(env["input"]["digest"] == graph_digest(p5));
  CHECK(env.contains("version"));
  CHECK(env.contains("seed"));
  CHECK(env.contains("rng"));
  certificate_verifies(p5, env);
  CHECK(graph_digest(p5) != graph_digest(path_graph(6)));
  CHECK(graph_digest(p5) == graph_digest(parse_edge_list("a b\nb c\nc d\nd e")));
}

TEST_CASE("every command emits a certificate that verifies") {
  Graph g = grid_graph(3, 4);
  std::vector<std::pair<std::string, Json>> runs{
      {"wcol", {{"r", 1}, {"mode", "degeneracy"}}},
      {"wcol", {{"r", 2}, {"mode", "greedy_wreach"}}},
      {"col", Json::object()},
      {"treedepth", Json::object()},
      {"minor", {{"r", 1}, {"clique", 3}}},
      {"minor", {{"r", 0}, {"pattern", "cycle(n=4)"}}},
      {"density", {{"r", 1}, {"seed", 4}, {"budget", 4}}},
      {"game", {{"r", 1}}},
      {"game", {{"r", 1}, {"splitter", "uqw"}}},
      {"game", {{"r", 2}, {"splitter", "random"}, {"connector", "random"}, {"seed", 9}}},
      {"game", {{"kind", "treedepth"}, {"splitter", "wcol"}}},
      {"uqw", {{"r", 1}, {"m", 3}}},
      {"uqw", {{"r", 1}, {"m", 3}, {"method", "brute"}, {"s_max", 1}}},
      {"separator", {{"r", 1}, {"epsilon", 0.3}}},
      {"cover", {{"r", 1}}},
      {"partition", {{"r", 1}, {"order_mode", "greedy_wreach"}}},
      {"eval", {{"k", 2}, {"r", 1}, {"chi", "true"}, {"mode", "both"}}},
      {"solve", {{"problem", "independent"}, {"r", 2}, {"k", 3}}},
      {"solve", {{"problem", "dominating"}, {"r", 1}}},
  };
  for (const auto& [cmd, params] : runs) {
    CAPTURE(cmd);
    Json env = run_command(g, cmd, params);
    certificate_verifies(g, env);
  }
}

TEST_CASE("identical invocations give identical output") {
  Graph g = random_gnd(30, 3, 5);
  Json params{{"r", 1}, {"splitter", "random"}, {"connector", "random"}, {"seed", 12}};
  CHECK(run_command(g, "game", params).dump() == run_command(g, "game", params).dump());
  Json d{{"r", 1}, {"seed", 3}};
  CHECK(run_command(g, "density", d).dump() == run_command(g, "density", d).dump());
}

TEST_CASE("parameter errors") {
  Graph g = path_graph(4);
  CHECK(code_of([&] { run_command(g, "wcol", Json::object()); }) == ErrorCode::Input);
  CHECK(code_of([&] { run_command(g, "wcol", {{"r", "two"}}); }) == ErrorCode::Input);
  CHECK(code_of([&] { run_command(g, "density", {{"r", 1}}); }) == ErrorCode::Input);
  CHECK(code_of([&] { run_command(g, "nosuch", Json::object()); }) == ErrorCode::Input);
  CHECK(code_of([&] { run_command(path_graph(12), "wcol", {{"r", 1}}); }) == ErrorCode::Capability);
  CHECK(code_of([&] { run_command(g, "eval", {{"formula", "exists x . E(x,y)"}}); }) == ErrorCode::Validation);
  CHECK(code_of([&] { run_command(g, "uqw", {{"r", 1}, {"m", 2}, {"A", {7}}}); }) == ErrorCode::Input);
}

TEST_CASE("verify rejects forged certificates") {
  Graph g = path_graph(5);
  Json forged{{"kind", "order_value"}, {"r", 2}, {"order", {0, 1, 2, 3, 4}}, {"value", 2}};
  CHECK(verify_certificate(g, forged)["verified"] == false);
  Json indep{{"kind", "independent_set"}, {"r", 2}, {"k", 2}, {"set", {0, 2}}};
  CHECK(verify_certificate(g, indep)["verified"] == false);
  Json dom{{"kind", "dominating_set"}, {"r", 1}, {"set", {0}}};
  CHECK(verify_certificate(g, dom)["verified"] == false);
  CHECK(code_of([&] { verify_certificate(g, Json{{"kind", "poem"}}); }) == ErrorCode::Input);
  CHECK(code_of([&] { verify_certificate(g, Json{{"kind", "order_value"}}); }) == ErrorCode::Parse);
}

TEST_CASE("sweeps") {
  Json empty = run_sweep({{"families", Json::array()}});
  CHECK(empty["rows"].empty());
  Json paths = run_sweep({{"families", {{{"template", "path(n={n})"}, {"n", {10, 40, 70, 100}}}}},
                          {"r", {1, 2, 3, 4}},
                          {"operations", {"wcol_heuristic"}}});
  CHECK(paths["rows"].size() == 16);
  for (const auto& row : paths["rows"]) CHECK(row["value"].get<int>() <= row["r"].get<int>() + 1);
  Json dens = run_sweep({{"families", {{{"template", "subdivision(r=1,base=complete(n={n}))"}, {"n", {4, 6, 8}}}}},
                         {"r", {1}},
                         {"operations", {"density"}},
                         {"seed", 1}});
  double last = 0;
  for (const auto& row : dens["rows"]) {
    CHECK(row["value"].get<double>() > last);
    last = row["value"].get<double>();
  }
  Json broken = run_sweep({{"families", {"path(n=5)", "nosuch(n=2)"}},
                           {"r", {1}},
                           {"operations", {"wcol_exact", "col"}}});
  REQUIRE(broken["rows"].size() == 4);
  CHECK(broken["rows"][0].contains("value"));
  CHECK(broken["rows"][2].contains("error"));
}
