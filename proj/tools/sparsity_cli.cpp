// Command-line front end over the C API. Prints one JSON document on
// standard output; summaries and diagnostics go to standard error.
//
// Exit codes: 0 ok, 1 --expect not met or certificate rejected, 2 usage,
// 3 search cap exceeded, 4 bad input, 5 internal or strategy failure.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparsity/sparsity.h"

using Json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kAbsent = 1, kUsage = 2, kCapability = 3, kBadInput = 4, kFailure = 5 };

int exit_for(spx_status s) {
  switch (s) {
    case SPX_OK: return kOk;
    case SPX_ERR_CAPABILITY: return kCapability;
    case SPX_ERR_INPUT:
    case SPX_ERR_PARSE:
    case SPX_ERR_VALIDATION:
    case SPX_ERR_PRECONDITION: return kBadInput;
    default: return kFailure;
  }
}

struct Failure {
  spx_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

struct GraphFree {
  void operator()(spx_graph* g) const { spx_graph_free(g); }
};
using GraphHandle = std::unique_ptr<spx_graph, GraphFree>;

std::string take(char* s) {
  std::string out(s ? s : "");
  spx_string_free(s);
  return out;
}

void check(spx_status s) {
  if (s != SPX_OK) throw Failure{s, spx_last_error()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SPX_ERR_INPUT, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_file(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::exception& e) {
    throw Failure{SPX_ERR_PARSE, path + ": " + e.what()};
  }
}

// "all", or comma separated vertex ids.
Json id_list(const std::string& text) {
  if (text == "all") return "all";
  Json out = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError{"'" + item + "' is not a vertex id"};
    }
  }
  return out;
}

// Randomized generator families missing a seed take the --seed value.
// Without one the spec is a usage error.
std::string seed_spec(const std::string& spec, std::optional<unsigned long long> seed) {
  std::string out = spec;
  for (const std::string family : {"gnd(", "random_tree("}) {
    for (std::size_t at = out.find(family); at != std::string::npos; at = out.find(family, at + 1)) {
      if (at > 0 && (std::isalnum(static_cast<unsigned char>(out[at - 1])) || out[at - 1] == '_')) continue;
      std::size_t open = at + family.size() - 1, close = open;
      int depth = 0;
      bool has_seed = false;
      for (std::size_t i = open; i < out.size(); ++i) {
        if (out[i] == '(') ++depth;
        if (out[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
        if (depth == 1 && out.compare(i, 5, "seed=") == 0 && (out[i - 1] == '(' || out[i - 1] == ',')) has_seed = true;
      }
      if (close == open || has_seed) continue;
      if (!seed) throw UsageError{"generator '" + family.substr(0, family.size() - 1) + "' is randomized: pass --seed"};
      out.insert(close, std::string(out[close - 1] == '(' ? "" : ",") + "seed=" + std::to_string(*seed));
    }
  }
  return out;
}

struct Source {
  std::string path;
  std::string gen;
  bool strict = false;

  GraphHandle load(std::optional<unsigned long long> seed) const {
    spx_graph* g = nullptr;
    if (!gen.empty() && !path.empty()) throw UsageError{"give either a graph file or --gen, not both"};
    if (!gen.empty()) check(spx_graph_generate(seed_spec(gen, seed).c_str(), &g));
    else if (!path.empty()) check(spx_graph_read_file(path.c_str(), strict ? 1 : 0, &g));
    else throw UsageError{"a graph file or --gen SPEC is required"};
    return GraphHandle(g);
  }

  Json describe(std::optional<unsigned long long> seed) const {
    return gen.empty() ? Json{{"file", path}} : Json{{"generator", seed_spec(gen, seed)}};
  }
};

struct Common {
  Source source;
  std::optional<unsigned long long> seed;
  std::string out;
  bool expect = false;
  bool quiet = false;
  bool compact = false;
};

void add_source(CLI::App* sub, Common& c) {
  sub->add_option("graph", c.source.path, "Graph file (edge list or DIMACS)");
  sub->add_option("--gen", c.source.gen, "Generator spec, e.g. grid(rows=4,cols=4)");
  sub->add_flag("--strict", c.source.strict, "Reject duplicate edges and self-loops");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for randomized operations");
  sub->add_option("--out", c.out, "Write the JSON document to this file");
  sub->add_flag("--expect", c.expect, "Exit 1 if the result is absent or false");
  sub->add_flag("--quiet", c.quiet, "No summary on standard error");
  sub->add_flag("--compact", c.compact, "Single-line JSON");
}

void emit(const Common& c, const Json& doc) {
  std::string text = c.compact ? doc.dump() : doc.dump(2);
  if (c.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Failure{SPX_ERR_INPUT, "cannot write '" + c.out + "'"};
  f << text << '\n';
}

void summarize(const Common& c, const Json& doc) {
  if (c.quiet) return;
  const Json& r = doc.value("result", Json::object());
  std::string line = doc.value("command", std::string("?"));
  for (const char* key : {"value", "present", "winner", "rounds", "size", "density", "count", "max_degree",
                          "verified", "holds", "stop_reason"}) {
    if (r.is_object() && r.contains(key)) line += std::string(" ") + key + "=" + r[key].dump();
  }
  std::cerr << line << " (" << doc.value("wall_time_ms", 0.0) << " ms)\n";
}

int finish(const Common& c, Json doc, double ms) {
  doc["wall_time_ms"] = ms;
  emit(c, doc);
  summarize(c, doc);
  const Json& r = doc["result"];
  if (c.expect && r.is_object()) {
    if (r.contains("present") && r["present"] == false) return kAbsent;
    if (r.contains("holds") && r["holds"] == false) return kAbsent;
  }
  if (doc["command"] == "verify" && r.value("verified", true) == false) return kAbsent;
  return kOk;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json run_on(const GraphHandle& g, const std::string& command, const Json& params) {
  char* out = nullptr;
  check(spx_run(g.get(), command.c_str(), params.dump().c_str(), &out));
  return Json::parse(take(out));
}

void put(Json& p, const char* key, const std::optional<int>& v) {
  if (v) p[key] = *v;
}
void put(Json& p, const char* key, const std::optional<double>& v) {
  if (v) p[key] = *v;
}
void put(Json& p, const char* key, const std::optional<std::string>& v) {
  if (v) p[key] = *v;
}

struct Flags {
  std::optional<int> r, k, m, cap, budget, round_cap, batch_limit, s_max, clique, max_host, target_size;
  std::optional<double> epsilon;
  std::optional<std::string> mode, order_mode, order, pattern, kind, splitter, connector, a, method, formula, chi,
      variable, problem, predicates, candidates, replay;
  bool stall_error = false, no_prune = false, fast = false;
};

void order_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--order-mode", f.order_mode, "degeneracy | greedy_wreach | identity | dfs | exact");
  sub->add_option("--order", f.order, "Explicit vertex order, comma separated ids");
}

Json order_params(const Flags& f) {
  Json p = Json::object();
  put(p, "order_mode", f.order_mode);
  if (f.order) p["order"] = id_list(*f.order);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse graph toolkit: orders, minors, games, wideness, covers, local logic"};
  app.set_version_flag("--version", spx_version());
  app.require_subcommand(1);

  Common c;
  Flags f;
  std::string cert_path, config_path, gen_spec;

  auto graph_sub = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_source(sub, c);
    add_common(sub, c);
    return sub;
  };

  CLI::App* wcol = graph_sub("wcol", "Weak r-coloring number with a witness order");
  wcol->add_option("--r", f.r, "Radius")->required();
  wcol->add_option("--mode", f.mode, "exact | degeneracy | greedy_wreach");
  wcol->add_option("--cap", f.cap, "Vertex cap for the exact search");
  order_flags(wcol, f);

  CLI::App* td = graph_sub("treedepth", "Exact treedepth with an elimination forest");
  td->add_option("--cap", f.cap, "Vertex cap");

  graph_sub("col", "Coloring number (degeneracy + 1)");

  CLI::App* minor = graph_sub("minor", "Search for a depth-r minor");
  minor->add_option("--r", f.r, "Depth")->required();
  minor->add_option("--pattern", f.pattern, "Pattern graph generator spec");
  minor->add_option("--clique", f.clique, "Pattern K_m");
  minor->add_option("--max-host", f.max_host, "Host vertex cap");

  CLI::App* density = graph_sub("density", "Lower bound on the densest depth-r minor (randomized)");
  density->add_option("--r", f.r, "Depth")->required();
  density->add_option("--budget", f.budget, "Number of attempts");

  CLI::App* game = graph_sub("game", "Play a treedepth or splitter game");
  game->add_option("--kind", f.kind, "treedepth | splitter");
  game->add_option("--r", f.r, "Radius");
  game->add_option("--splitter", f.splitter, "wcol | uqw | exhaustive | random");
  game->add_option("--connector", f.connector, "greedy | random | exhaustive");
  game->add_option("--round-cap", f.round_cap, "Maximum number of rounds");
  game->add_option("--batch-limit", f.batch_limit, "Maximum splitter deletions per round");
  game->add_option("--cap", f.cap, "Vertex cap for exhaustive strategies");
  game->add_option("--replay", f.replay, "Re-validate a transcript JSON file instead of playing");
  order_flags(game, f);

  CLI::App* uqw = graph_sub("uqw", "Uniform quasi-wideness certificate");
  uqw->add_option("--A", f.a, "Target set: all, or comma separated ids");
  uqw->add_option("--r", f.r, "Distance")->required();
  uqw->add_option("--m", f.m, "Wanted independent set size")->required();
  uqw->add_option("--method", f.method, "extract | brute");
  uqw->add_option("--s-max", f.s_max, "Largest deletion set tried by brute");
  order_flags(uqw, f);

  CLI::App* sep = graph_sub("separator", "Balanced neighborhood separator");
  sep->add_option("--A", f.a, "Target set: all, or comma separated ids");
  sep->add_option("--r", f.r, "Radius")->required();
  sep->add_option("--epsilon", f.epsilon, "Ball fraction bound")->required();
  sep->add_option("--target-size", f.target_size, "Stop once the separator is this small");
  sep->add_flag("--stall-error", f.stall_error, "Fail instead of stopping when no exchange shrinks the set");
  sep->add_flag("--no-prune", f.no_prune, "Keep every separator vertex the exchange loop produced");
  order_flags(sep, f);

  CLI::App* cover = graph_sub("cover", "r-neighborhood cover");
  cover->add_option("--r", f.r, "Radius")->required();
  order_flags(cover, f);

  CLI::App* part = graph_sub("partition", "Partition cover by coloring");
  part->add_option("--r", f.r, "Radius")->required();
  order_flags(part, f);

  CLI::App* eval = graph_sub("eval", "Evaluate a first-order sentence or a basic-local sentence");
  eval->add_option("--formula", f.formula, "Sentence, e.g. 'exists x . forall y . (x = y | E(x,y))'");
  eval->add_option("--k", f.k, "Basic-local: number of scattered witnesses");
  eval->add_option("--r", f.r, "Basic-local: locality radius");
  eval->add_option("--chi", f.chi, "Basic-local: r-local formula in one free variable");
  eval->add_option("--variable", f.variable, "Basic-local: free variable of chi");
  eval->add_option("--mode", f.mode, "local | both");
  eval->add_option("--predicates", f.predicates, "JSON object mapping predicate names to id arrays");

  CLI::App* solve = graph_sub("solve", "Distance-r independent or dominating set");
  solve->add_option("--problem", f.problem, "independent | dominating")->required();
  solve->add_option("--r", f.r, "Distance")->required();
  solve->add_option("--k", f.k, "Independent set size");
  solve->add_option("--mode", f.mode, "exact | greedy");
  solve->add_option("--candidates", f.candidates, "Restrict independent set to these ids");
  solve->add_option("--cap", f.cap, "Vertex cap for the exact dominating set");
  solve->add_flag("--fast", f.fast, "Try a quasi-wideness shortcut first");
  order_flags(solve, f);

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  add_common(gen, c);
  std::string edge_out;
  gen->add_option("--edges", edge_out, "Also write the edge list to this file");

  CLI::App* verify = app.add_subcommand("verify", "Re-check a certificate or a command output");
  verify->add_option("certificate", cert_path, "Certificate or command output JSON")->required();
  verify->add_option("--graph", c.source.path, "Graph file the certificate refers to");
  verify->add_option("--gen", c.source.gen, "Generator spec of the graph");
  verify->add_flag("--strict", c.source.strict, "Reject duplicate edges and self-loops");
  add_common(verify, c);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate measurements over graph families");
  sweep->add_option("config", config_path, "Sweep configuration JSON")->required();
  add_common(sweep, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (name == "sweep") {
      Json cfg = parse_file(config_path);
      if (c.seed) cfg["seed"] = *c.seed;
      if (cfg.is_object() && cfg.contains("operations")) {
        for (const auto& op : cfg["operations"])
          if (op == "density" && !cfg.contains("seed")) throw UsageError{"density rows are randomized: pass --seed"};
      }
      char* out = nullptr;
      check(spx_sweep(cfg.dump().c_str(), &out));
      Json doc = Json::parse(take(out));
      doc["command"] = "sweep";
      doc["input"] = {{"source", {{"file", config_path}}}};
      doc["params"] = cfg;
      doc["result"] = {{"rows", doc["rows"].size()}};
      return finish(c, doc, since(t0));
    }

    if (name == "gen") {
      spx_graph* raw = nullptr;
      check(spx_graph_generate(seed_spec(gen_spec, c.seed).c_str(), &raw));
      GraphHandle g(raw);
      Json doc = run_on(g, "gen", Json::object());
      doc["input"]["source"] = {{"generator", seed_spec(gen_spec, c.seed)}};
      if (!edge_out.empty()) {
        char* text = nullptr;
        check(spx_graph_write_edge_list(g.get(), &text));
        std::ofstream fout(edge_out, std::ios::binary);
        if (!fout) throw Failure{SPX_ERR_INPUT, "cannot write '" + edge_out + "'"};
        fout << take(text);
      }
      return finish(c, doc, since(t0));
    }

    if (name == "verify") {
      Json doc = parse_file(cert_path);
      Json cert = doc.is_object() && doc.contains("certificate") ? doc["certificate"] : doc;
      if (cert.is_null()) throw Failure{SPX_ERR_INPUT, "the document carries no certificate"};
      GraphHandle g = c.source.load(c.seed);
      Json params{{"certificate", cert}};
      Json result = run_on(g, "verify", params);
      if (doc.is_object() && doc.contains("input") && doc["input"].contains("digest") &&
          doc["input"]["digest"] != result["input"]["digest"])
        throw Failure{SPX_ERR_INPUT, "certificate was produced for a different graph (digest mismatch)"};
      result["params"] = {{"certificate", cert_path}};
      result["input"]["source"] = c.source.describe(c.seed);
      return finish(c, result, since(t0));
    }

    Json p = Json::object();
    std::string command = name;
    if (name == "wcol") {
      put(p, "r", f.r);
      put(p, "mode", f.mode);
      put(p, "cap", f.cap);
      p.update(order_params(f));
    } else if (name == "treedepth") {
      put(p, "cap", f.cap);
    } else if (name == "minor") {
      put(p, "r", f.r);
      if (f.pattern.has_value() == f.clique.has_value()) throw UsageError{"give exactly one of --pattern, --clique"};
      put(p, "pattern", f.pattern);
      put(p, "clique", f.clique);
      put(p, "max_host", f.max_host);
    } else if (name == "density") {
      if (!c.seed) throw UsageError{"density is randomized: pass --seed"};
      put(p, "r", f.r);
      put(p, "budget", f.budget);
    } else if (name == "game") {
      if (f.replay) {
        command = "replay";
        p["transcript"] = parse_file(*f.replay);
        if (p["transcript"].contains("certificate")) p["transcript"] = p["transcript"]["certificate"];
      } else {
        if ((f.splitter == "random" || f.connector == "random") && !c.seed)
          throw UsageError{"random strategies are randomized: pass --seed"};
        put(p, "kind", f.kind);
        put(p, "r", f.r);
        put(p, "splitter", f.splitter);
        put(p, "connector", f.connector);
        put(p, "round_cap", f.round_cap);
        put(p, "batch_limit", f.batch_limit);
        put(p, "cap", f.cap);
        p.update(order_params(f));
      }
    } else if (name == "uqw") {
      if (f.a) p["A"] = id_list(*f.a);
      put(p, "r", f.r);
      put(p, "m", f.m);
      put(p, "method", f.method);
      put(p, "s_max", f.s_max);
      p.update(order_params(f));
    } else if (name == "separator") {
      if (f.a) p["A"] = id_list(*f.a);
      put(p, "r", f.r);
      put(p, "epsilon", f.epsilon);
      put(p, "target_size", f.target_size);
      p["stall_error"] = f.stall_error;
      p["prune"] = !f.no_prune;
      p.update(order_params(f));
    } else if (name == "cover" || name == "partition") {
      put(p, "r", f.r);
      p.update(order_params(f));
    } else if (name == "eval") {
      if (f.formula.has_value() == f.chi.has_value()) throw UsageError{"give exactly one of --formula, --chi"};
      if (f.chi && (!f.k || !f.r)) throw UsageError{"--chi needs --k and --r"};
      put(p, "formula", f.formula);
      put(p, "chi", f.chi);
      put(p, "k", f.k);
      put(p, "r", f.r);
      put(p, "variable", f.variable);
      put(p, "mode", f.mode);
      if (f.predicates) {
        try {
          p["predicates"] = Json::parse(*f.predicates);
        } catch (const Json::exception&) {
          throw UsageError{"--predicates must be a JSON object"};
        }
      }
    } else if (name == "solve") {
      put(p, "problem", f.problem);
      put(p, "r", f.r);
      put(p, "k", f.k);
      put(p, "mode", f.mode);
      put(p, "cap", f.cap);
      if (f.candidates) p["candidates"] = id_list(*f.candidates);
      if (f.fast) p["fast"] = true;
      p.update(order_params(f));
      if (f.problem == "independent" && !f.k) throw UsageError{"--problem independent needs --k"};
    }
    if (c.seed) p["seed"] = *c.seed;

    GraphHandle g = c.source.load(c.seed);
    Json doc = run_on(g, command, p);
    doc["input"]["source"] = c.source.describe(c.seed);
    return finish(c, doc, since(t0));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    std::cout << Json{{"command", name}, {"error", {{"code", "usage"}, {"message", e.message}}}}.dump() << '\n';
    return kUsage;
  } catch (const Failure& e) {
    std::cerr << name << ": " << spx_status_name(e.status) << " error: " << e.message << "\n";
    Json doc{{"command", name},
             {"error", {{"code", spx_status_name(e.status)}, {"message", e.message}}},
             {"version", spx_version()},
             {"wall_time_ms", since(t0)}};
    std::cout << doc.dump(c.compact ? -1 : 2) << '\n';
    return exit_for(e.status);
  }
}
