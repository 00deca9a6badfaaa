// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check runs against exact oracles or independent validators.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sparsity/error.hpp"
#include "sparsity/games.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/io.hpp"
#include "sparsity/logic.hpp"
#include "sparsity/minors.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/random.hpp"
#include "sparsity/solvers.hpp"
#include "sparsity/validate.hpp"
#include "sparsity/wideness.hpp"

using namespace sparsity;

namespace {

struct Outcome {
  std::vector<std::string> violations;
  std::string summary;
  std::size_t checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) violations.push_back(what);
  }
};

Graph spec_graph(const std::string& text) { return generate(parse_generator_spec(text)); }

Graph random_small_graph(Rng& rng, Vertex max_n) {
  Vertex n = static_cast<Vertex>(2 + rng.below(static_cast<std::uint64_t>(max_n - 1)));
  double p = 0.15 + 0.7 * rng.unit();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng.bernoulli(p)) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.size() << " edges=[";
  bool first = true;
  for (auto [a, b] : g.edges()) {
    out << (first ? "" : ",") << a << "-" << b;
    first = false;
  }
  out << "]";
  return out.str();
}

// Connected graphs up to 7 vertices plus 200 random graphs up to 8.
const std::vector<Graph>& small_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out = oracle::connected_graphs(7);
    Rng rng(20240611);
    for (int i = 0; i < 200; ++i) out.push_back(random_small_graph(rng, 8));
    return out;
  }();
  return corpus;
}

struct Named {
  std::string name;
  Graph graph;
};

// 100 mixed graphs with at most 40 vertices, about a third of them small
// enough for the exhaustive connector.
const std::vector<Named>& mixed_corpus() {
  static const std::vector<Named> corpus = [] {
    std::vector<std::string> specs{
        "path(n=5)",         "path(n=9)",          "path(n=17)",        "path(n=40)",
        "cycle(n=6)",        "cycle(n=9)",         "cycle(n=13)",       "cycle(n=31)",
        "grid(rows=2,cols=3)", "grid(rows=3,cols=3)", "grid(rows=2,cols=5)", "grid(rows=4,cols=5)",
        "grid(rows=5,cols=8)", "grid(rows=6,cols=6)", "star(n=5)",      "star(n=9)",
        "star(n=20)",        "star(n=39)",         "complete(n=4)",     "complete(n=5)",
        "complete(n=6)",     "complete(n=8)",      "subdivision(r=1,base=complete(n=4))",
        "subdivision(r=1,base=complete(n=5))",     "subdivision(r=2,base=complete(n=4))",
        "subdivision(r=1,base=cycle(n=5))",        "apex(base=path(n=7))",
        "apex(base=cycle(n=9))",                   "apex(base=grid(rows=3,cols=4))",
        "apex(base=star(n=6))",
    };
    std::vector<Named> out;
    for (const auto& s : specs) out.push_back({s, spec_graph(s)});
    for (std::uint64_t seed = 1; out.size() < 100; ++seed) {
      Vertex n = static_cast<Vertex>(seed % 3 == 0 ? 6 + seed % 5 : 11 + (seed * 7) % 30);
      std::string s;
      if (seed % 2 == 0) {
        s = "random_tree(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
      } else {
        int d = 2 + static_cast<int>(seed % 3);
        s = "gnd(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",seed=" + std::to_string(seed) + ")";
      }
      out.push_back({s, spec_graph(s)});
    }
    return out;
  }();
  return corpus;
}

std::vector<std::pair<std::string, VertexOrder>> heuristic_orders(const Graph& g, int radius) {
  return {{"degeneracy", wcol_heuristic(g, radius, OrderHeuristic::Degeneracy).order},
          {"greedy_wreach", wcol_heuristic(g, radius, OrderHeuristic::GreedyWReach).order}};
}

// ------------------------------------------------------------------ criteria

Outcome chain_law() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  const auto& corpus = small_corpus();
  out.check(corpus.size() == 996 + 200, "connected graph count up to 7 vertices is not 996");
  for (const Graph& g : corpus) {
    const Vertex n = g.size();
    int col = coloring_number(g).value;
    int prev = 0;
    for (int r = 1; r <= n; ++r) {
      int w = wcol_exact(g, r).value;
      if (r == 1) out.check(w == col, "wcol_1 != col on " + describe(g));
      out.check(w >= prev, "wcol not monotone at r=" + std::to_string(r) + " on " + describe(g));
      prev = w;
    }
    out.check(prev == treedepth_exact(g).value, "wcol_n != treedepth on " + describe(g));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.check(secs < 300.0, "runtime over 5 minutes");
  out.summary = std::to_string(corpus.size()) + " graphs in " + std::to_string(secs).substr(0, 5) + " s";
  return out;
}

Outcome treedepth_game() {
  Outcome out;
  GameConfig cfg;
  cfg.kind = GameKind::Treedepth;
  for (const Graph& g : small_corpus()) {
    cfg.round_cap = std::max<Vertex>(1, g.size());
    int value = game_value(g, cfg);
    out.check(value == treedepth_exact(g).value, "game value != treedepth on " + describe(g));
    out.check(value == oracle::treedepth(g), "game value != oracle treedepth on " + describe(g));
  }
  out.summary = std::to_string(small_corpus().size()) + " graphs";
  return out;
}

Outcome splitter_wins() {
  Outcome out;
  std::size_t games = 0, rounds = 0, max_n = 0;
  for (const auto& [name, g] : mixed_corpus())
    for (int r = 1; r <= 2; ++r)
      for (const auto& [oname, order] : heuristic_orders(g, 2 * r)) {
        int bound = wcol_of_order(g, order, 2 * r);
        GameConfig cfg;
        cfg.r = r;
        cfg.round_cap = bound;
        std::vector<std::unique_ptr<ConnectorStrategy>> connectors;
        connectors.push_back(greedy_connector_strategy());
        for (std::uint64_t seed = 1; seed <= 10; ++seed) connectors.push_back(random_connector_strategy(seed));
        if (g.size() <= 10) connectors.push_back(exhaustive_connector_strategy());
        for (auto& connector : connectors) {
          auto splitter = wcol_splitter_strategy(order);
          std::string tag = name + " r=" + std::to_string(r) + " " + oname + " vs " + connector->name();
          try {
            GameTranscript t = play(g, cfg, *splitter, *connector);
            ++games;
            rounds += t.rounds.size();
            max_n = std::max<std::size_t>(max_n, g.size());
            out.check(t.winner == Winner::Splitter, "connector survived " + std::to_string(bound) + " rounds: " + tag);
            out.check(static_cast<int>(t.rounds.size()) <= bound, "too many rounds: " + tag);
            Verdict v = check_transcript(g, t);
            out.check(v.ok, "transcript rejected: " + tag + (v.ok ? "" : ": " + v.violations.front()));
          } catch (const Error& e) {
            out.check(false, "error in " + tag + ": " + e.what());
          }
        }
      }
  out.summary = std::to_string(games) + " games, " + std::to_string(rounds) + " rounds on " +
                std::to_string(mixed_corpus().size()) + " graphs with n <= " + std::to_string(max_n);
  return out;
}

Outcome covers() {
  Outcome out;
  for (const auto& [name, g] : mixed_corpus())
    for (int r = 1; r <= 2; ++r)
      for (const auto& [oname, order] : heuristic_orders(g, 2 * r)) {
        Cover c = neighborhood_cover(g, r, order);
        int bound = reference_wcol(g, order, 2 * r);
        Verdict v = check_cover(g, c, bound);
        std::string tag = name + " r=" + std::to_string(r) + " " + oname;
        out.check(v.ok, "cover rejected: " + tag + (v.ok ? "" : ": " + v.violations.front()));
        out.check(c.radius_bound <= 2 * r, "radius bound above 2r: " + tag);
      }
  out.summary = std::to_string(out.checks / 2) + " covers";
  return out;
}

Outcome partitions() {
  Outcome out;
  for (const auto& [name, g] : mixed_corpus())
    for (int r = 1; r <= 2; ++r)
      for (const auto& [oname, order] : heuristic_orders(g, 4 * r + 1)) {
        PartitionCover pc = partition_cover(g, r, order);
        int bound = reference_wcol(g, order, 4 * r + 1);
        Verdict v = check_partition(g, pc, bound);
        std::string tag = name + " r=" + std::to_string(r) + " " + oname;
        out.check(v.ok, "partition rejected: " + tag + (v.ok ? "" : ": " + v.violations.front()));
      }
  out.summary = std::to_string(out.checks) + " partitions";
  return out;
}

Outcome separators() {
  Outcome out;
  std::vector<std::string> specs{"star(n=10)",          "star(n=60)",          "star(n=199)",
                                 "grid(rows=3,cols=3)", "grid(rows=5,cols=6)", "grid(rows=10,cols=10)"};
  for (int n : {20, 60, 120, 200}) {
    specs.push_back("random_tree(n=" + std::to_string(n) + ",seed=" + std::to_string(n + 1) + ")");
    specs.push_back("gnd(n=" + std::to_string(n) + ",d=3,seed=" + std::to_string(n + 2) + ")");
  }
  std::size_t runs = 0, steps = 0;
  for (const auto& s : specs) {
    Graph g = spec_graph(s);
    VertexOrder order = coloring_number(g).order;
    for (int r = 1; r <= 2; ++r)
      for (double eps : {0.5, 0.2, 0.1}) {
        std::string tag = s + " r=" + std::to_string(r) + " eps=" + std::to_string(eps).substr(0, 3);
        try {
          SeparatorCertificate cert = balanced_separator(g, VertexSet::range(g.size()), r, eps, order);
          ++runs;
          steps += cert.steps.size();
          double fraction = worst_ball_fraction(g, cert.a, cert.s, r);
          double oracle_fraction = 0.0;
          auto d = oracle::all_distances(g, oracle::alive_without(g, cert.s));
          for (Vertex v = 0; v < g.size(); ++v) {
            if (cert.s.contains(v)) continue;
            std::size_t hits = 0;
            for (Vertex w : cert.a)
              if (d[v][w] <= r) ++hits;
            oracle_fraction = std::max(oracle_fraction, static_cast<double>(hits) / cert.a.size());
          }
          out.check(std::abs(fraction - oracle_fraction) < 1e-12, "fraction disagrees with BFS oracle: " + tag);
          out.check(oracle_fraction <= eps + 1e-12, "ball fraction above eps: " + tag);
          Verdict v = check_separator(g, cert);
          out.check(v.ok, "separator rejected: " + tag + (v.ok ? "" : ": " + v.violations.front()));
        } catch (const Error& e) {
          out.check(false, "error in " + tag + ": " + e.what());
        }
      }
  }
  out.summary = std::to_string(runs) + " runs, " + std::to_string(steps) + " exchange steps";
  return out;
}

Graph star_forest(int stars, int leaves) {
  std::vector<Edge> edges;
  Vertex n = 0;
  for (int s = 0; s < stars; ++s) {
    Vertex center = n++;
    for (int l = 0; l < leaves; ++l) edges.emplace_back(center, n++);
  }
  return Graph::from_edges(n, edges);
}

Outcome wideness() {
  Outcome out;
  std::size_t certificates = 0, guaranteed = 0, brute_checked = 0;
  auto run = [&](const std::string& name, const Graph& g, const VertexSet& a, int r, std::size_t m,
                 const VertexOrder& order) {
    std::string tag = name + " |A|=" + std::to_string(a.size()) + " r=" + std::to_string(r) + " m=" + std::to_string(m);
    UqwCertificate cert = uqw_extract(g, a, r, m, order);
    ++certificates;
    Verdict v = check_uqw(g, cert, false);
    out.check(v.ok, "certificate rejected: " + tag + (v.ok ? "" : ": " + v.violations.front()));
    out.check(cert.c == reference_wcol(g, order, r), "c is not wcol_r of the order: " + tag);
    bool above = static_cast<double>(a.size()) >= uqw_threshold(cert.c, m);
    out.check(cert.precondition_met == above, "precondition flag wrong: " + tag);
    bool eligible = above && cert.c <= 2 && m <= 3;
    if (eligible) {
      ++guaranteed;
      out.check(cert.s.size() <= static_cast<std::size_t>(cert.c) && cert.b.size() >= m, "guarantee missed: " + tag);
      Verdict strict = check_uqw(g, cert, true);
      out.check(strict.ok, "guarantee rejected: " + tag);
    }
    if (g.size() <= 18) {
      ++brute_checked;
      auto best = uqw_brute(g, a, r, m, cert.c);
      bool extract_hit = cert.b.size() >= m && cert.s.size() <= static_cast<std::size_t>(cert.c);
      if (extract_hit) out.check(best.has_value(), "brute force misses an extracted solution: " + tag);
      if (best) {
        Verdict bv = check_uqw(g, *best, false);
        out.check(bv.ok, "brute certificate rejected: " + tag);
        out.check(best->s.size() <= static_cast<std::size_t>(cert.c) && best->b.size() >= m, "brute result short: " + tag);
        if (extract_hit) out.check(best->b.size() >= cert.b.size() || best->s.size() < cert.s.size(),
                                   "brute force worse than extraction: " + tag);
      }
      if (eligible) out.check(best.has_value(), "guarantee not achievable by brute force: " + tag);
    }
  };

  // Small instances for the brute-force cross-check.
  Rng rng(77);
  for (const auto& [name, g] : mixed_corpus()) {
    if (g.size() > 18) continue;
    for (int r = 1; r <= 2; ++r) {
      VertexOrder order = wcol_heuristic(g, r, OrderHeuristic::Degeneracy).order;
      std::vector<Vertex> half;
      for (Vertex v = 0; v < g.size(); ++v)
        if (rng.bernoulli(0.5)) half.push_back(v);
      for (std::size_t m = 1; m <= 3; ++m) {
        run(name, g, VertexSet::range(g.size()), r, m, order);
        if (!half.empty()) run(name + " half", g, VertexSet(half), r, m, order);
      }
    }
  }
  // Edgeless graphs have c = 1 and a threshold small enough for brute force.
  for (Vertex n : {8, 12, 16, 18}) {
    Graph g = Graph::from_edges(n, {});
    for (int r = 1; r <= 2; ++r)
      for (std::size_t m = 1; m <= 2; ++m) run("edgeless(" + std::to_string(n) + ")", g, VertexSet::range(n), r, m,
                                               VertexOrder::identity(n));
  }
  // Large sparse instances where |A| clears 4(2cm)^c with c <= 2.
  std::vector<Named> large{{"random_tree(n=80)", random_tree(80, 5)},
                           {"random_tree(n=300)", random_tree(300, 6)},
                           {"random_tree(n=700)", random_tree(700, 7)},
                           {"path(n=600)", path_graph(600)},
                           {"star(n=700)", star_graph(700)},
                           {"star_forest(40x15)", star_forest(40, 15)},
                           {"matching(350)", star_forest(350, 1)},
                           {"edgeless(100)", Graph::from_edges(100, {})}};
  for (const auto& [name, g] : large)
    for (int r = 1; r <= 2; ++r) {
      VertexOrder order = coloring_number(g).order;
      for (std::size_t m = 1; m <= 3; ++m) run(name, g, VertexSet::range(g.size()), r, m, order);
    }
  out.check(guaranteed >= 20, "fewer than 20 instances clear the threshold");
  out.summary = std::to_string(certificates) + " certificates, " + std::to_string(guaranteed) +
                " above threshold, " + std::to_string(brute_checked) + " brute-force cross-checks";
  return out;
}

// Random r-local formula around "x": every quantified variable is guarded
// by a ball around an earlier variable, and distance atoms stay inside 2r.
struct FormulaMaker {
  Rng& rng;
  int r;
  int fresh = 0;

  FormulaPtr make(std::vector<std::pair<std::string, int>>& scope, int depth) {
    std::uint64_t roll = depth > 0 ? 6 + rng.below(8) : rng.below(6);
    if (depth > 0 && rng.bernoulli(0.25)) roll = rng.below(6);
    if (roll < 6) {
      // Atoms favour the newest variable and a distinct partner.
      std::size_t ia = rng.bernoulli(0.6) ? scope.size() - 1 : rng.below(scope.size());
      std::size_t ib = rng.below(scope.size());
      if (ib == ia && scope.size() > 1) ib = (ia + 1 + rng.below(scope.size() - 1)) % scope.size();
      const auto& a = scope[ia];
      const auto& b = scope[ib];
      switch (roll) {
        case 0: return f_edge(a.first, b.first);
        case 1: return rng.bernoulli(0.5) ? f_eq(a.first, b.first) : f_pred("P", a.first);
        case 2: return f_pred("P", b.first);
        case 3: {
          int room = 2 * r - a.second - b.second;
          if (room < 0) return f_edge(a.first, b.first);
          return f_dist_le(a.first, b.first, static_cast<int>(rng.below(static_cast<std::uint64_t>(room) + 1)));
        }
        case 4: {
          int room = 2 * r - a.second - b.second;
          if (room < 0) return f_not(f_edge(a.first, b.first));
          return f_dist_gt(a.first, b.first, static_cast<int>(rng.below(static_cast<std::uint64_t>(room) + 1)));
        }
        default: return rng.bernoulli(0.5) ? f_true() : f_false();
      }
    }
    if (roll == 6) return f_not(make(scope, depth - 1));
    if (roll <= 8) return rng.bernoulli(0.5) ? f_and(make(scope, depth - 1), make(scope, depth - 1))
                                             : f_or(make(scope, depth - 1), make(scope, depth - 1));
    std::vector<std::pair<std::string, int>> anchors;
    for (const auto& v : scope)
      if (v.second < r) anchors.push_back(v);
    if (anchors.empty()) return make(scope, depth - 1);
    const auto anchor = anchors[rng.below(anchors.size())];
    int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r - anchor.second)));
    std::string name = "y" + std::to_string(fresh++);
    scope.emplace_back(name, anchor.second + d);
    FormulaPtr body = make(scope, depth - 1);
    scope.pop_back();
    return roll <= 11 ? f_exists_within(name, d, anchor.first, body) : f_forall_within(name, d, anchor.first, body);
  }
};

Outcome locality() {
  Outcome out;
  Rng rng(4242);
  std::size_t pairs = 0, true_count = 0;
  while (pairs < 600) {
    Vertex n = static_cast<Vertex>(1 + rng.below(20));
    Graph g = rng.bernoulli(0.3) ? random_tree(n, rng.next()) : random_gnd(n, std::min<double>(n - 1, 1.0 + 3.0 * rng.unit()), rng.next());
    int k = 1 + static_cast<int>(rng.below(3));
    int r = 1 + static_cast<int>(rng.below(2));
    FormulaMaker maker{rng, r};
    std::vector<std::pair<std::string, int>> scope{{"x", 0}};
    FormulaPtr chi = maker.make(scope, 5);
    std::vector<Vertex> marked;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.4)) marked.push_back(v);
    Predicates preds{{"P", VertexSet(marked)}};
    BasicLocalSentence s;
    try {
      s = make_basic_local(k, r, to_string(chi));
    } catch (const Error& e) {
      out.check(false, std::string("generated formula rejected as non-local: ") + to_string(chi) + ": " + e.what());
      continue;
    }
    ++pairs;
    LocalEvaluation local = eval_basic_local(g, s, preds);
    bool naive = eval_naive(g, expand_basic_local(s), {}, preds);
    true_count += naive ? 1 : 0;
    std::string tag = "k=" + std::to_string(k) + " r=" + std::to_string(r) + " chi=" + to_string(chi) + " on " + describe(g);
    out.check(local.holds == naive, "local and naive disagree: " + tag);
    if (local.witness) {
      out.check(local.witness->size() == static_cast<std::size_t>(k), "witness size wrong: " + tag);
      for (Vertex a : *local.witness) {
        out.check(local.satisfying.contains(a), "witness vertex does not satisfy chi: " + tag);
        for (Vertex b : *local.witness)
          if (a < b) out.check(oracle::bfs(g, a)[b] > 2 * r, "witness vertices too close: " + tag);
      }
    }
  }
  out.check(true_count > 50 && true_count < pairs - 50, "sentence sample is lopsided");
  std::size_t dom = 0;
  for (Vertex n = 3; n <= 12; ++n) {
    Graph c = cycle_graph(n);
    std::size_t optimum = oracle::min_dominating(c, 1);
    for (int k = 1; k <= 5; ++k) {
      ++dom;
      bool holds = eval_naive(c, parse_formula(dominating_formula(k)));
      out.check(holds == (static_cast<std::size_t>(k) >= optimum),
                "dominating formula k=" + std::to_string(k) + " wrong on C" + std::to_string(n));
    }
    DominatingResult exact = distance_dominating_set(c, 1, DominationMode::Exact);
    out.check(exact.set.size() == optimum, "dominating solver not optimal on C" + std::to_string(n));
  }
  out.summary = std::to_string(pairs) + " random pairs (" + std::to_string(true_count) + " true), " +
                std::to_string(dom) + " dominating checks on cycles";
  return out;
}

Outcome minor_search() {
  Outcome out;
  std::vector<Graph> patterns;
  auto all = oracle::graphs_up_to(3);
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t code : all[k]) patterns.push_back(oracle::graph_from_code(k, code));
  std::size_t cases = 0;
  auto compare = [&](const Graph& g) {
    oracle::MinorEnumerator naive(g);
    for (const Graph& h : patterns)
      for (int r = 0; r <= 2; ++r) {
        ++cases;
        auto model = find_depth_r_minor(g, h, r);
        bool expect = naive.has(h, r);
        std::string tag = "pattern " + describe(h) + " r=" + std::to_string(r) + " host " + describe(g);
        out.check(model.has_value() == expect, "search and enumerator disagree: " + tag);
        if (model) {
          MinorCheck mc = verify_minor_model(g, h, *model);
          out.check(mc.ok, "model rejected: " + tag);
        }
      }
  };
  // Every graph up to 7 vertices, then random hosts on 8 and 9 vertices.
  auto hosts = oracle::graphs_up_to(7);
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 7; ++n)
    for (std::uint64_t code : hosts[n]) {
      compare(oracle::graph_from_code(n, code));
      ++exhaustive;
    }
  Rng rng(909);
  std::size_t sampled = 0;
  for (Vertex n : {8, 9})
    for (int i = 0; i < (n == 8 ? 150 : 60); ++i) {
      double p = 0.1 + 0.5 * rng.unit();
      std::vector<Edge> edges;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          if (rng.bernoulli(p)) edges.emplace_back(a, b);
      compare(Graph::from_edges(n, edges));
      ++sampled;
    }
  // Subdivision law.
  std::size_t law = 0;
  for (Vertex m = 2; m <= 4; ++m)
    for (int r = 0; r <= 4; ++r) {
      Graph g = subdivide(complete_graph(m), r);
      Graph km = complete_graph(m);
      int depth = (r + 1) / 2;
      std::string tag = "K" + std::to_string(m) + " from its " + std::to_string(r) + "-subdivision";
      auto model = find_depth_r_minor(g, km, depth, {5, 40});
      ++law;
      out.check(model.has_value(), tag + " not found at depth " + std::to_string(depth));
      if (model) out.check(verify_minor_model(g, km, *model).ok, tag + ": model rejected");
      if (m >= 3 && depth >= 1) {
        ++law;
        out.check(!find_depth_r_minor(g, km, depth - 1, {5, 40}), tag + " found below depth " + std::to_string(depth));
      }
    }
  out.summary = std::to_string(cases) + " comparisons over " + std::to_string(exhaustive) + " exhaustive and " +
                std::to_string(sampled) + " sampled hosts, " + std::to_string(law) + " subdivision checks";
  return out;
}

Outcome lower_bound() {
  Outcome out;
  std::vector<std::size_t> sizes;
  std::ostringstream detail;
  for (Vertex n : {6, 10, 14}) {
    Graph g = subdivide(complete_graph(n), 1);
    VertexSet branch = VertexSet::range(n);
    SeparatorCertificate cert = balanced_separator(g, branch, 2, 0.5, coloring_number(g).order);
    Verdict v = check_separator(g, cert);
    out.check(v.ok, "separator rejected for n=" + std::to_string(n));
    sizes.push_back(cert.s.size());
    DensityReport rep = density_report(g, 1, 64, 11);
    out.check(rep.density >= (n - 1) / 2.0, "density below (n-1)/2 for n=" + std::to_string(n));
    detail << " n=" << n << ":|S|=" << cert.s.size() << ",density=" << rep.density;
  }
  for (std::size_t i = 1; i < sizes.size(); ++i)
    out.check(sizes[i] > sizes[i - 1], "separator size does not grow from step " + std::to_string(i));
  out.summary = detail.str().substr(1);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "chain law of weak coloring numbers", chain_law},
      {2, "treedepth game value equals treedepth", treedepth_game},
      {3, "wcol splitter wins within wcol_2r rounds", splitter_wins},
      {4, "neighborhood covers validate", covers},
      {5, "partition covers validate", partitions},
      {6, "balanced separators re-verify", separators},
      {7, "uniform quasi-wideness extraction", wideness},
      {8, "local evaluation matches naive evaluation", locality},
      {9, "shallow minor search completeness", minor_search},
      {10, "subdivided cliques resist separation", lower_bound},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.violations.push_back(std::string("uncaught error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.violations.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d (%s): %s; %zu checks, %zu violations, %.1f s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                o.summary.c_str(), o.checks, o.violations.size(), secs);
    for (std::size_t i = 0; i < o.violations.size() && i < 5; ++i) std::printf("    %s\n", o.violations[i].c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
