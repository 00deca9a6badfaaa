#include <doctest.h>

#include "oracles.hpp"
#include "sparsity/error.hpp"
#include "sparsity/io.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/random.hpp"
#include "sparsity/validate.hpp"

using namespace sparsity;

namespace {

std::vector<Vertex> random_perm(Vertex n, std::uint64_t seed) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rng rng(seed);
  rng.shuffle(p);
  return p;
}

}  // namespace

TEST_CASE("orders reject non-permutations") {
  CHECK_THROWS_AS(VertexOrder(std::vector<Vertex>{0, 0, 1}), Error);
  CHECK_THROWS_AS(VertexOrder(std::vector<Vertex>{0, 3}), Error);
  VertexOrder o(std::vector<Vertex>{2, 0, 1});
  CHECK(o.rank(2) == 0);
  CHECK(o.less(0, 1));
  CHECK(o.min_of({0, 1}) == 0);
}

TEST_CASE("wreach table examples on P_3") {
  Graph p3 = path_graph(3);
  VertexOrder id = VertexOrder::identity(3);
  auto t1 = wreach_table(p3, id, 1);
  CHECK(t1.sets[2] == VertexSet{1, 2});
  CHECK(t1.sets[1] == VertexSet{0, 1});
  CHECK(t1.sets[0] == VertexSet{0});
  auto t2 = wreach_table(p3, id, 2);
  CHECK(oracle::wreach_by_paths(p3, {0, 1, 2}, 2)[2] == VertexSet{0, 1, 2});
  CHECK(t2.sets[2] == VertexSet{0, 1, 2});
  Graph g = random_gnd(12, 3, 5);
  auto t0 = wreach_table(g, VertexOrder::identity(12), 0);
  for (Vertex v = 0; v < 12; ++v) CHECK(t0.sets[v] == VertexSet{v});
}

TEST_CASE("wcol_of_order examples") {
  Graph k4 = complete_graph(4);
  std::vector<Vertex> perm{0, 1, 2, 3};
  do {
    CHECK(oracle::wcol_by_paths(k4, perm, 1) == 4);
    CHECK(wcol_of_order(k4, VertexOrder(perm), 1) == 4);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Graph star = star_graph(5);
  VertexOrder center_first = VertexOrder::identity(6);
  CHECK(oracle::wcol_by_paths(star, center_first.perm(), 2) == 2);
  CHECK(wcol_of_order(star, center_first, 2) == 2);
  CHECK(oracle::wcol_by_paths(path_graph(5), {0, 1, 2, 3, 4}, 2) == 3);
  CHECK(wcol_of_order(path_graph(5), VertexOrder::identity(5), 2) == 3);
}

TEST_CASE("wreach table agrees with path enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_gnd(static_cast<Vertex>(6 + seed % 7), 2.5, seed);
    auto perm = random_perm(g.size(), seed * 31);
    VertexOrder order(perm);
    for (int r = 0; r <= 4; ++r) {
      auto table = wreach_table(g, order, r);
      auto expect = oracle::wreach_by_paths(g, perm, r);
      CHECK(table.sets == expect);
      CHECK(reference_wreach(g, order, r) == expect);
      for (Vertex v = 0; v < g.size(); ++v) {
        CHECK(table.sets[v].contains(v));
        if (r > 0) CHECK(wreach_table(g, order, r - 1).sets[v].is_subset_of(table.sets[v]));
        for (Vertex u : table.sets[v]) CHECK(order.rank(u) <= order.rank(v));
      }
      auto sizes = wreach_sizes(g, order, r);
      for (Vertex v = 0; v < g.size(); ++v) CHECK(sizes[v] == static_cast<int>(table.sets[v].size()));
    }
  }
}

TEST_CASE("wcol_exact examples") {
  CHECK(oracle::wcol_all_orders(cycle_graph(5), 1) == 3);
  CHECK(wcol_exact(cycle_graph(5), 1).value == 3);
  for (Vertex n = 1; n <= 6; ++n)
    for (int r = 1; r <= 3; ++r) CHECK(wcol_exact(complete_graph(n), r).value == n);
  CHECK(oracle::wcol_all_orders(complete_graph(5), 2) == 5);
  CHECK(wcol_exact(path_graph(2), 1).value == 2);
  CHECK_THROWS_AS(wcol_exact(path_graph(11), 1), Error);
  try {
    wcol_exact(path_graph(11), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Capability);
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("wcol_exact matches the all-orders oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_gnd(static_cast<Vertex>(4 + seed % 4), 2.8, seed + 100);
    for (int r = 1; r <= 3; ++r) {
      OrderResult res = wcol_exact(g, r);
      CHECK(res.value == oracle::wcol_all_orders(g, r));
      CHECK(oracle::wcol_by_paths(g, res.order.perm(), r) == res.value);
    }
  }
}

TEST_CASE("heuristic orders report exact values") {
  Graph tree = random_tree(50, 2024);
  OrderResult t = wcol_heuristic(tree, 2, OrderHeuristic::Degeneracy);
  CHECK(t.value <= 5);
  CHECK(oracle::wcol_by_paths(tree, t.order.perm(), 2) == t.value);
  for (auto h : {OrderHeuristic::Degeneracy, OrderHeuristic::GreedyWReach})
    CHECK(wcol_heuristic(complete_graph(5), 3, h).value == 5);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_gnd(8, 3, seed);
    for (int r = 1; r <= 3; ++r) {
      int exact = wcol_exact(g, r).value;
      for (auto h : {OrderHeuristic::Degeneracy, OrderHeuristic::GreedyWReach}) {
        OrderResult res = wcol_heuristic(g, r, h);
        CHECK(res.value >= exact);
        CHECK(wcol_of_order(g, res.order, r) == res.value);
      }
    }
  }
  // DFS orders of trees give wcol_r <= r + 1
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph tr = random_tree(60, seed);
    for (int r = 1; r <= 4; ++r) CHECK(wcol_of_order(tr, dfs_order(tr), r) <= r + 1);
  }
}

TEST_CASE("coloring number examples") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) CHECK(coloring_number(random_tree(20, seed)).value == 2);
  CHECK(coloring_number(cycle_graph(7)).value == 3);
  CHECK(coloring_number(Graph(1)).value == 1);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_gnd(30, 4, seed);
    OrderResult c = coloring_number(g);
    CHECK(c.value == oracle::coloring_number(g));
    CHECK(wcol_of_order(g, c.order, 1) == c.value);
  }
}

TEST_CASE("treedepth examples") {
  for (Vertex n = 1; n <= 6; ++n) {
    CHECK(oracle::treedepth(complete_graph(n)) == n);
    CHECK(treedepth_exact(complete_graph(n)).value == n);
  }
  CHECK(oracle::treedepth(path_graph(7)) == 3);
  CHECK(treedepth_exact(path_graph(7)).value == 3);
  CHECK(treedepth_exact(Graph(5)).value == 1);
  CHECK_THROWS_AS(treedepth_exact(path_graph(16)), Error);
}

TEST_CASE("treedepth forests are valid and agree with orders") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_gnd(static_cast<Vertex>(5 + seed % 4), 2.5, seed + 7);
    TreedepthResult td = treedepth_exact(g);
    CHECK(td.value == oracle::treedepth(g));
    CHECK(td.forest.depth() == td.value);
    CHECK(td.forest.is_elimination_forest_of(g));
    CHECK(check_elimination_forest(g, td.forest, td.value).ok);
    // treedepth equals wcol_n
    CHECK(oracle::wcol_all_orders(g, g.size()) == td.value);
  }
}

TEST_CASE("short paths between unreachable pairs meet both reachability sets") {
  VertexOrder pi(std::vector<Vertex>{2, 0, 1, 3, 4});
  CHECK(check_separation(path_graph(5), pi, 3, 1, 4));
  CHECK_THROWS_AS(check_separation(path_graph(5), VertexOrder::identity(5), 4, 0, 4), Error);
  Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(check_separation(two, VertexOrder(std::vector<Vertex>{3, 2, 1, 0}), 2, 1, 2));
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_gnd(static_cast<Vertex>(8 + seed % 8), 3, seed);
    VertexOrder order(random_perm(g.size(), seed));
    for (int r = 1; r <= 3; ++r) {
      auto table = reference_wreach(g, order, r);
      for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = 0; v < g.size(); ++v) {
          if (u == v || table[v].contains(u)) continue;
          CHECK(check_separation(g, order, r, u, v));
          ++checked;
        }
    }
  }
  CHECK(checked > 1000);
}
