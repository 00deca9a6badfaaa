// Uses only the public C header and the shared library.
#include <doctest.h>

#include <cstring>
#include <string>

#include "sparsity/sparsity.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  spx_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  spx_graph* g = nullptr;
  REQUIRE(spx_graph_parse_edge_list("a b\nb c\n", 0, &g) == SPX_OK);
  CHECK(spx_graph_vertex_count(g) == 3);
  CHECK(spx_graph_edge_count(g) == 2);
  char* text = nullptr;
  REQUIRE(spx_graph_write_edge_list(g, &text) == SPX_OK);
  CHECK(take(text) == "a b\nb c\n");
  spx_graph_free(g);

  REQUIRE(spx_graph_generate("grid(rows=3,cols=3)", &g) == SPX_OK);
  CHECK(spx_graph_edge_count(g) == 12);
  spx_graph_free(g);

  REQUIRE(spx_graph_parse_dimacs("p edge 3 1\ne 1 3\n", 0, &g) == SPX_OK);
  CHECK(spx_graph_vertex_count(g) == 3);
  spx_graph_free(g);
  spx_graph_free(nullptr);
}

TEST_CASE("error codes and messages") {
  spx_graph* g = reinterpret_cast<spx_graph*>(0x1);
  CHECK(spx_graph_parse_edge_list("a b c\n", 0, &g) == SPX_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strstr(spx_last_error(), "line 1") != nullptr);
  CHECK(spx_graph_parse_edge_list("a a\n", 1, &g) == SPX_ERR_VALIDATION);
  CHECK(spx_graph_generate("gnd(n=5,d=2)", &g) == SPX_ERR_PARSE);
  CHECK(spx_graph_read_file("/nonexistent/graph.el", 0, &g) == SPX_ERR_INPUT);
  CHECK(spx_graph_parse_edge_list(nullptr, 0, &g) == SPX_ERR_INPUT);
  CHECK(std::string(spx_status_name(SPX_ERR_CAPABILITY)) == "capability");

  REQUIRE(spx_graph_generate("path(n=12)", &g) == SPX_OK);
  char* out = nullptr;
  CHECK(spx_run(g, "wcol", "{\"r\":1}", &out) == SPX_ERR_CAPABILITY);
  CHECK(out == nullptr);
  CHECK(spx_run(g, "wcol", "{not json", &out) == SPX_ERR_PARSE);
  CHECK(spx_run(g, "treedepth", nullptr, &out) == SPX_OK);
  CHECK(std::string(spx_last_error()).empty());
  spx_string_free(out);
  spx_graph_free(g);
}

TEST_CASE("run and verify through the C interface") {
  spx_graph* g = nullptr;
  REQUIRE(spx_graph_generate("cycle(n=8)", &g) == SPX_OK);
  char* out = nullptr;
  REQUIRE(spx_run(g, "cover", "{\"r\":1}", &out) == SPX_OK);
  std::string env = take(out);
  CHECK(env.find("\"command\":\"cover\"") != std::string::npos);
  auto at = env.find("\"certificate\":");
  REQUIRE(at != std::string::npos);
  // certificate object: balanced braces from its opening brace
  std::size_t start = env.find('{', at), depth = 0, end = start;
  for (; end < env.size(); ++end) {
    if (env[end] == '{') ++depth;
    if (env[end] == '}' && --depth == 0) break;
  }
  std::string cert = env.substr(start, end - start + 1);
  REQUIRE(spx_verify(g, cert.c_str(), &out) == SPX_OK);
  CHECK(take(out).find("\"verified\":true") != std::string::npos);
  REQUIRE(spx_verify(g, "{\"kind\":\"dominating_set\",\"r\":1,\"set\":[0]}", &out) == SPX_OK);
  CHECK(take(out).find("\"verified\":false") != std::string::npos);
  spx_graph_free(g);

  REQUIRE(spx_sweep("{\"families\":[]}", &out) == SPX_OK);
  CHECK(take(out).find("\"rows\":[]") != std::string::npos);
  CHECK(std::string(spx_version()).size() > 0);
}
