#include "sparsity/commands.hpp"

#include <algorithm>
#include <cstdio>

#include "sparsity/error.hpp"
#include "sparsity/games.hpp"
#include "sparsity/io.hpp"
#include "sparsity/logic.hpp"
#include "sparsity/minors.hpp"
#include "sparsity/orders.hpp"
#include "sparsity/random.hpp"
#include "sparsity/solvers.hpp"
#include "sparsity/validate.hpp"
#include "sparsity/wideness.hpp"

namespace sparsity {

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  feed(static_cast<std::uint64_t>(g.size()));
  for (auto [a, b] : g.edges()) {
    feed(static_cast<std::uint64_t>(a));
    feed(static_cast<std::uint64_t>(b));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Parameter access with defaults written back into `p`.
class Params {
 public:
  explicit Params(const Json& given) : p_(given.is_null() ? Json::object() : given) {
    if (!p_.is_object()) throw Error(ErrorCode::Input, "parameters must be a JSON object");
  }

  int integer(const char* key, std::optional<int> fallback = std::nullopt) {
    if (!p_.contains(key)) {
      if (!fallback) throw Error(ErrorCode::Input, std::string("missing parameter '") + key + "'");
      p_[key] = *fallback;
    }
    if (!p_[key].is_number_integer()) throw Error(ErrorCode::Input, std::string("parameter '") + key + "' must be an integer");
    return p_[key].get<int>();
  }

  double number(const char* key, std::optional<double> fallback = std::nullopt) {
    if (!p_.contains(key)) {
      if (!fallback) throw Error(ErrorCode::Input, std::string("missing parameter '") + key + "'");
      p_[key] = *fallback;
    }
    if (!p_[key].is_number()) throw Error(ErrorCode::Input, std::string("parameter '") + key + "' must be a number");
    return p_[key].get<double>();
  }

  std::string text(const char* key, std::optional<std::string> fallback = std::nullopt) {
    if (!p_.contains(key)) {
      if (!fallback) throw Error(ErrorCode::Input, std::string("missing parameter '") + key + "'");
      p_[key] = *fallback;
    }
    if (!p_[key].is_string()) throw Error(ErrorCode::Input, std::string("parameter '") + key + "' must be a string");
    return p_[key].get<std::string>();
  }

  bool flag(const char* key, bool fallback) {
    if (!p_.contains(key)) p_[key] = fallback;
    if (!p_[key].is_boolean()) throw Error(ErrorCode::Input, std::string("parameter '") + key + "' must be true or false");
    return p_[key].get<bool>();
  }

  std::uint64_t seed(const std::string& why) {
    if (!p_.contains("seed") || p_["seed"].is_null())
      throw Error(ErrorCode::Input, why + " is randomized and requires a seed");
    if (!p_["seed"].is_number_unsigned() && !(p_["seed"].is_number_integer() && p_["seed"].get<long long>() >= 0))
      throw Error(ErrorCode::Input, "seed must be a non-negative integer");
    return p_["seed"].get<std::uint64_t>();
  }

  bool has(const char* key) const { return p_.contains(key) && !p_[key].is_null(); }
  const Json& raw(const char* key) const { return p_.at(key); }
  const Json& json() const { return p_; }

 private:
  Json p_;
};

VertexSet vertex_param(const Graph& g, Params& p, const char* key) {
  if (!p.has(key)) {
    p.text(key, "all");
    return VertexSet::range(g.size());
  }
  const Json& v = p.raw(key);
  if (v.is_string()) {
    if (v.get<std::string>() != "all") throw Error(ErrorCode::Input, std::string("parameter '") + key + "' must be \"all\" or an id array");
    return VertexSet::range(g.size());
  }
  VertexSet s = vertex_set_from_json(v);
  for (Vertex x : s) require_vertex(g, x);
  return s;
}

// "order": explicit id array, or "order_mode": degeneracy | greedy_wreach |
// identity | dfs | exact.
VertexOrder order_param(const Graph& g, Params& p, int heuristic_radius) {
  if (p.has("order")) {
    VertexOrder o = order_from_json(p.raw("order"));
    if (o.size() != g.size()) throw Error(ErrorCode::Input, "order size does not match the graph");
    return o;
  }
  std::string mode = p.text("order_mode", "degeneracy");
  if (mode == "degeneracy") return coloring_number(g).order;
  if (mode == "greedy_wreach") return wcol_heuristic(g, std::max(1, heuristic_radius), OrderHeuristic::GreedyWReach).order;
  if (mode == "identity") return VertexOrder::identity(g.size());
  if (mode == "dfs") return dfs_order(g);
  if (mode == "exact") return wcol_exact(g, std::max(1, heuristic_radius)).order;
  throw Error(ErrorCode::Input, "unknown order mode '" + mode + "'");
}

Json graph_json(const Graph& g) {
  return Json{{"n", g.size()}, {"edges", [&] {
                 Json e = Json::array();
                 for (auto [a, b] : g.edges()) e.push_back({a, b});
                 return e;
               }()}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return Graph::from_edges(j.at("n").get<Vertex>(), edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed graph JSON: ") + e.what());
  }
}

Json with_kind(const char* kind, Json body) {
  body["kind"] = kind;
  return body;
}

struct Outcome {
  Json result = Json::object();
  Json certificate = nullptr;
  std::optional<std::uint64_t> seed;
};

// --------------------------------------------------------------- commands

Outcome cmd_wcol(const Graph& g, Params& p) {
  Outcome out;
  int r = p.integer("r");
  if (r < 0) throw Error(ErrorCode::Input, "r must be non-negative");
  OrderResult res;
  std::string mode = p.text("mode", "exact");
  if (p.has("order")) {
    res.order = order_param(g, p, r);
    res.value = wcol_of_order(g, res.order, r);
    mode = "given";
    p.text("mode", "given");
  } else if (mode == "exact") {
    res = wcol_exact(g, r, static_cast<Vertex>(p.integer("cap", 10)));
  } else if (mode == "degeneracy") {
    res = wcol_heuristic(g, r, OrderHeuristic::Degeneracy);
  } else if (mode == "greedy_wreach" || mode == "greedy") {
    res = wcol_heuristic(g, r, OrderHeuristic::GreedyWReach);
  } else {
    throw Error(ErrorCode::Input, "unknown wcol mode '" + mode + "' (exact, degeneracy, greedy_wreach)");
  }
  out.result = {{"value", res.value}, {"order", res.order.perm()}, {"exact", mode == "exact"}};
  out.certificate = with_kind("order_value", {{"r", r}, {"order", res.order.perm()}, {"value", res.value}});
  return out;
}

Outcome cmd_col(const Graph& g, Params&) {
  Outcome out;
  OrderResult res = coloring_number(g);
  out.result = {{"value", res.value}, {"order", res.order.perm()}};
  out.certificate = with_kind("order_value", {{"r", 1}, {"order", res.order.perm()}, {"value", res.value}});
  return out;
}

Outcome cmd_treedepth(const Graph& g, Params& p) {
  Outcome out;
  TreedepthResult res = treedepth_exact(g, static_cast<Vertex>(p.integer("cap", 15)));
  Json forest = to_json(res.forest);
  out.result = {{"value", res.value}, {"forest", forest}};
  out.certificate = with_kind("elimination_forest", {{"parent", forest["parent"]}, {"value", res.value}});
  return out;
}

Outcome cmd_minor(const Graph& g, Params& p) {
  Outcome out;
  int r = p.integer("r");
  Graph h;
  std::string pattern;
  if (p.has("clique")) {
    int m = p.integer("clique");
    if (m < 0) throw Error(ErrorCode::Input, "clique size must be non-negative");
    h = complete_graph(m);
    pattern = "complete(n=" + std::to_string(m) + ")";
  } else {
    pattern = p.text("pattern");
    h = generate(parse_generator_spec(pattern));
  }
  MinorSearchLimits limits;
  limits.max_pattern_vertices = static_cast<Vertex>(p.integer("max_pattern", limits.max_pattern_vertices));
  limits.max_host_vertices = static_cast<Vertex>(p.integer("max_host", limits.max_host_vertices));
  std::optional<MinorModel> model;
  if (h.size() > g.size()) model = std::nullopt;
  else model = find_depth_r_minor(g, h, r, limits);
  out.result = {{"present", model.has_value()}, {"pattern", pattern}, {"depth", r}};
  if (model) {
    out.result["model"] = to_json(*model);
    out.certificate = with_kind("minor_model", {{"pattern", graph_json(h)}, {"model", to_json(*model)}});
  }
  return out;
}

Outcome cmd_density(const Graph& g, Params& p) {
  Outcome out;
  int r = p.integer("r");
  int budget = p.integer("budget", 32);
  std::uint64_t seed = p.seed("density");
  out.seed = seed;
  DensityReport rep = density_report(g, r, budget, seed);
  out.result = {{"density", rep.density},
                {"bound", "lower"},
                {"depth", rep.depth},
                {"attempts", rep.attempts},
                {"minor", graph_json(rep.minor)},
                {"model", to_json(rep.model)}};
  out.certificate = with_kind("minor_model", {{"pattern", graph_json(rep.minor)}, {"model", to_json(rep.model)}});
  return out;
}

std::unique_ptr<SplitterStrategy> make_splitter(const std::string& name, const Graph& g, Params& p, int r,
                                                std::optional<std::uint64_t>& seed, VertexOrder* used_order) {
  if (name == "wcol") {
    VertexOrder order = order_param(g, p, 2 * r);
    if (used_order) *used_order = order;
    return wcol_splitter_strategy(order);
  }
  if (name == "uqw") return uqw_splitter_strategy();
  if (name == "exhaustive") return exhaustive_splitter_strategy(static_cast<Vertex>(p.integer("cap", 10)));
  if (name == "random") {
    seed = p.seed("the random splitter");
    return random_splitter_strategy(split_seed(*seed, 0));
  }
  throw Error(ErrorCode::Input, "unknown splitter strategy '" + name + "' (wcol, uqw, exhaustive, random)");
}

std::unique_ptr<ConnectorStrategy> make_connector(const std::string& name, Params& p,
                                                  std::optional<std::uint64_t>& seed) {
  if (name == "greedy") return greedy_connector_strategy();
  if (name == "exhaustive") return exhaustive_connector_strategy(static_cast<Vertex>(p.integer("cap", 10)));
  if (name == "random") {
    seed = p.seed("the random connector");
    return random_connector_strategy(split_seed(*seed, 1));
  }
  throw Error(ErrorCode::Input, "unknown connector strategy '" + name + "' (greedy, random, exhaustive)");
}

Outcome cmd_game(const Graph& g, Params& p) {
  Outcome out;
  GameConfig cfg;
  cfg.kind = parse_game_kind(p.text("kind", "splitter"));
  cfg.r = p.integer("r", 1);
  std::string sp_name = p.text("splitter", cfg.kind == GameKind::Treedepth ? "exhaustive" : "wcol");
  std::string co_name = p.text("connector", "greedy");
  cfg.round_cap = p.integer("round_cap", std::max<int>(1, g.size()));
  cfg.batch_limit = p.integer("batch_limit", sp_name == "uqw" ? cfg.round_cap * (cfg.r + 1) : 1);
  std::optional<std::uint64_t> seed;
  VertexOrder order;
  auto splitter = make_splitter(sp_name, g, p, cfg.r, seed, &order);
  auto connector = make_connector(co_name, p, seed);
  out.seed = seed;
  GameTranscript t = play(g, cfg, *splitter, *connector);
  out.result = {{"winner", t.winner == Winner::Splitter ? "splitter" : "connector"},
                {"rounds", t.rounds.size()},
                {"present", t.winner == Winner::Splitter}};
  if (sp_name == "wcol" && cfg.kind == GameKind::Splitter) {
    out.result["order"] = order.perm();
    out.result["round_bound"] = wcol_of_order(g, order, 2 * cfg.r);
  }
  out.certificate = with_kind("transcript", to_json(t));
  return out;
}

Outcome cmd_replay(const Graph& g, Params& p) {
  Outcome out;
  GameTranscript t = transcript_from_json(p.raw("transcript"));
  Verdict v = check_transcript(g, t);
  out.result = {{"verified", v.ok}, {"violations", v.violations}, {"rounds", t.rounds.size()},
                {"winner", t.winner == Winner::Splitter ? "splitter" : "connector"}, {"present", v.ok}};
  return out;
}

Outcome cmd_game_value(const Graph& g, Params& p) {
  Outcome out;
  GameConfig cfg;
  cfg.kind = parse_game_kind(p.text("kind", "treedepth"));
  cfg.r = p.integer("r", 1);
  cfg.batch_limit = p.integer("batch_limit", 1);
  cfg.round_cap = std::max<int>(1, g.size());
  out.result = {{"value", game_value(g, cfg, static_cast<Vertex>(p.integer("cap", 10)))}};
  return out;
}

Outcome cmd_uqw(const Graph& g, Params& p) {
  Outcome out;
  VertexSet a = vertex_param(g, p, "A");
  int r = p.integer("r");
  int m = p.integer("m");
  if (m < 1) throw Error(ErrorCode::Input, "m must be at least 1");
  std::string method = p.text("method", "extract");
  if (method == "brute") {
    auto cert = uqw_brute(g, a, r, static_cast<std::size_t>(m), p.integer("s_max", 3),
                          static_cast<Vertex>(p.integer("cap", 18)));
    out.result = {{"present", cert.has_value()}};
    if (cert) {
      out.result["certificate"] = to_json(*cert);
      out.certificate = with_kind("uqw", to_json(*cert));
    }
    return out;
  }
  if (method != "extract") throw Error(ErrorCode::Input, "unknown uqw method '" + method + "' (extract, brute)");
  VertexOrder order = order_param(g, p, r);
  UqwCertificate cert = uqw_extract(g, a, r, static_cast<std::size_t>(m), order);
  out.result = to_json(cert);
  out.result["present"] = cert.b.size() >= static_cast<std::size_t>(m);
  out.result["order"] = order.perm();
  out.certificate = with_kind("uqw", to_json(cert));
  return out;
}

Outcome cmd_separator(const Graph& g, Params& p) {
  Outcome out;
  VertexSet a = vertex_param(g, p, "A");
  int r = p.integer("r");
  double eps = p.number("epsilon");
  SeparatorOptions opt;
  opt.target_size = static_cast<std::size_t>(std::max(0, p.integer("target_size", 0)));
  opt.stall_is_error = p.flag("stall_error", false);
  opt.prune = p.flag("prune", true);
  VertexOrder order = order_param(g, p, 4 * r);
  SeparatorCertificate cert = balanced_separator(g, a, r, eps, order, opt);
  out.result = to_json(cert);
  out.result["size"] = cert.s.size();
  out.certificate = with_kind("separator", to_json(cert));
  return out;
}

Outcome cmd_cover(const Graph& g, Params& p) {
  Outcome out;
  int r = p.integer("r");
  VertexOrder order = order_param(g, p, 2 * r);
  Cover cover = neighborhood_cover(g, r, order);
  out.result = to_json(cover);
  out.result["degree_bound"] = wcol_of_order(g, order, 2 * r);
  Json cert = to_json(cover);
  cert["order"] = order.perm();
  out.certificate = with_kind("cover", cert);
  return out;
}

Outcome cmd_partition(const Graph& g, Params& p) {
  Outcome out;
  int r = p.integer("r");
  VertexOrder order = order_param(g, p, 4 * r + 1);
  PartitionCover pc = partition_cover(g, r, order);
  out.result = to_json(pc);
  out.result["count_bound"] = wcol_of_order(g, order, 4 * r + 1);
  Json cert = to_json(pc);
  cert["order"] = order.perm();
  out.certificate = with_kind("partition", cert);
  return out;
}

Predicates predicate_param(const Graph& g, Params& p) {
  Predicates preds;
  if (!p.has("predicates")) return preds;
  const Json& j = p.raw("predicates");
  if (!j.is_object()) throw Error(ErrorCode::Input, "predicates must map names to id arrays");
  for (const auto& [name, ids] : j.items()) {
    VertexSet s = vertex_set_from_json(ids);
    for (Vertex v : s) require_vertex(g, v);
    preds.emplace(name, s);
  }
  return preds;
}

Outcome cmd_eval(const Graph& g, Params& p) {
  Outcome out;
  Predicates preds = predicate_param(g, p);
  if (p.has("chi")) {
    BasicLocalSentence s = make_basic_local(p.integer("k"), p.integer("r"), p.text("chi"), p.text("variable", "x"));
    std::string mode = p.text("mode", "local");
    LocalEvaluation local = eval_basic_local(g, s, preds);
    out.result = {{"holds", local.holds}, {"present", local.holds}, {"satisfying", to_json(local.satisfying)},
                  {"expanded", to_string(expand_basic_local(s))}};
    if (mode == "both") {
      bool naive = eval_naive(g, expand_basic_local(s), {}, preds);
      out.result["naive"] = naive;
      if (naive != local.holds) throw Error(ErrorCode::Internal, "local and naive evaluation disagree");
    } else if (mode != "local") {
      throw Error(ErrorCode::Input, "unknown eval mode '" + mode + "' (local, both)");
    }
    if (local.witness) {
      out.result["witness"] = to_json(*local.witness);
      out.certificate = with_kind("local_witness", {{"k", s.k}, {"r", s.r}, {"chi", to_string(s.chi)},
                                                    {"variable", s.variable}, {"witness", to_json(*local.witness)}});
    }
    return out;
  }
  FormulaPtr f = parse_formula(p.text("formula"));
  bool holds = eval_naive(g, f, {}, preds);
  out.result = {{"holds", holds}, {"present", holds}, {"formula", to_string(f)}};
  return out;
}

Outcome cmd_solve(const Graph& g, Params& p) {
  Outcome out;
  std::string problem = p.text("problem");
  int r = p.integer("r");
  if (problem == "independent") {
    int k = p.integer("k");
    VertexSet cand = vertex_param(g, p, "candidates");
    std::optional<VertexOrder> order;
    if (p.flag("fast", false)) order = order_param(g, p, r);
    auto found = distance_independent_set(g, r, k, cand, order ? &*order : nullptr);
    out.result = {{"present", found.has_value()}};
    if (found) {
      out.result["set"] = to_json(*found);
      out.certificate = with_kind("independent_set", {{"r", r}, {"k", k}, {"set", to_json(*found)}});
    }
    return out;
  }
  if (problem == "dominating") {
    std::string mode = p.text("mode", "exact");
    if (mode != "exact" && mode != "greedy") throw Error(ErrorCode::Input, "mode must be exact or greedy");
    auto res = distance_dominating_set(g, r, mode == "exact" ? DominationMode::Exact : DominationMode::Greedy,
                                       static_cast<Vertex>(p.integer("cap", 25)));
    out.result = {{"set", to_json(res.set)}, {"size", res.set.size()}, {"exact", res.exact}};
    if (res.optimum) out.result["optimum"] = *res.optimum;
    out.certificate = with_kind("dominating_set", {{"r", r}, {"set", to_json(res.set)}});
    return out;
  }
  throw Error(ErrorCode::Input, "unknown problem '" + problem + "' (independent, dominating)");
}

Outcome cmd_gen(const Graph& g, Params&) {
  Outcome out;
  out.result = graph_json(g);
  out.result["m"] = g.edge_count();
  if (g.has_labels()) out.result["labels"] = g.labels();
  return out;
}

Outcome cmd_verify(const Graph& g, Params& p) {
  Outcome out;
  out.result = verify_certificate(g, p.raw("certificate"));
  out.result["present"] = out.result["verified"];
  return out;
}

using Handler = Outcome (*)(const Graph&, Params&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"wcol", cmd_wcol},         {"col", cmd_col},           {"treedepth", cmd_treedepth},
      {"minor", cmd_minor},       {"density", cmd_density},   {"game", cmd_game},
      {"replay", cmd_replay},     {"game_value", cmd_game_value}, {"uqw", cmd_uqw},
      {"separator", cmd_separator}, {"cover", cmd_cover},     {"partition", cmd_partition},
      {"eval", cmd_eval},         {"solve", cmd_solve},       {"gen", cmd_gen},
      {"verify", cmd_verify}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Json run_command(const Graph& g, const std::string& command, const Json& params) {
  auto it = std::find_if(handlers().begin(), handlers().end(), [&](const auto& e) { return e.first == command; });
  if (it == handlers().end()) throw Error(ErrorCode::Input, "unknown command '" + command + "'");
  Params p(params);
  Outcome out = it->second(g, p);
  Json env;
  env["command"] = command;
  env["input"] = {{"digest", graph_digest(g)}, {"n", g.size()}, {"m", g.edge_count()}};
  env["params"] = p.json();
  env["result"] = out.result;
  env["certificate"] = out.certificate;
  env["seed"] = out.seed ? Json(*out.seed) : Json(nullptr);
  env["version"] = SPARSITY_VERSION;
  env["rng"] = kRngAlgorithm;
  return env;
}

// ------------------------------------------------------------------ verify

namespace {

Verdict verify_independent(const Graph& g, const Json& c) {
  Verdict v;
  int r = c.at("r").get<int>();
  VertexSet s = vertex_set_from_json(c.at("set"));
  if (c.contains("k") && s.size() != c.at("k").get<std::size_t>()) v.fail("set size differs from k");
  for (Vertex x : s) {
    if (!g.contains(x)) {
      v.fail("unknown vertex " + std::to_string(x));
      return v;
    }
  }
  auto d = all_pairs_distances(g);
  for (Vertex a : s)
    for (Vertex b : s)
      if (a < b && d[a][b] != kUnreached && d[a][b] <= r)
        v.fail("v" + std::to_string(a) + " and v" + std::to_string(b) + " are within distance r");
  return v;
}

Verdict verify_dominating(const Graph& g, const Json& c) {
  Verdict v;
  int r = c.at("r").get<int>();
  VertexSet s = vertex_set_from_json(c.at("set"));
  auto d = all_pairs_distances(g);
  for (Vertex x = 0; x < g.size(); ++x) {
    bool hit = std::any_of(s.begin(), s.end(), [&](Vertex y) {
      return g.contains(y) && d[y][x] != kUnreached && d[y][x] <= r;
    });
    if (!hit) v.fail("v" + std::to_string(x) + " is not dominated");
  }
  return v;
}

Verdict verify_local_witness(const Graph& g, const Json& c) {
  BasicLocalSentence s = make_basic_local(c.at("k").get<int>(), c.at("r").get<int>(), c.at("chi").get<std::string>(),
                                          c.value("variable", "x"));
  VertexSet w = vertex_set_from_json(c.at("witness"));
  Verdict v = verify_independent(g, Json{{"r", 2 * s.r}, {"set", c.at("witness")}});
  if (w.size() != static_cast<std::size_t>(s.k)) v.fail("witness does not have k vertices");
  VertexSet sat = eval_basic_local(g, s).satisfying;
  for (Vertex x : w)
    if (g.contains(x) && !sat.contains(x)) v.fail("v" + std::to_string(x) + " does not satisfy the local formula");
  return v;
}

}  // namespace

Json verify_certificate(const Graph& g, const Json& certificate) {
  if (!certificate.is_object() || !certificate.contains("kind"))
    throw Error(ErrorCode::Input, "certificate must be an object with a \"kind\" field");
  const Json& c = certificate;
  std::string kind = c.at("kind").get<std::string>();
  Verdict v;
  try {
    if (kind == "order_value") {
      v = check_order_value(g, order_from_json(c.at("order")), c.at("r").get<int>(), c.at("value").get<int>());
    } else if (kind == "elimination_forest") {
      v = check_elimination_forest(g, forest_from_json(c), c.at("value").get<int>());
    } else if (kind == "minor_model") {
      MinorCheck mc = verify_minor_model(g, graph_from_json(c.at("pattern")), minor_model_from_json(c.at("model")));
      v.ok = mc.ok;
      v.violations = mc.violations;
    } else if (kind == "transcript") {
      v = check_transcript(g, transcript_from_json(c));
    } else if (kind == "uqw") {
      UqwCertificate u = uqw_from_json(c);
      v = check_uqw(g, u, u.guarantee_met);
    } else if (kind == "separator") {
      v = check_separator(g, separator_from_json(c));
    } else if (kind == "cover") {
      std::optional<int> bound;
      if (c.contains("order")) bound = reference_wcol(g, order_from_json(c.at("order")), 2 * c.at("r").get<int>());
      v = check_cover(g, cover_from_json(c), bound);
    } else if (kind == "partition") {
      std::optional<int> bound;
      if (c.contains("order")) bound = reference_wcol(g, order_from_json(c.at("order")), 4 * c.at("r").get<int>() + 1);
      v = check_partition(g, partition_from_json(c), bound);
    } else if (kind == "independent_set") {
      v = verify_independent(g, c);
    } else if (kind == "dominating_set") {
      v = verify_dominating(g, c);
    } else if (kind == "local_witness") {
      v = verify_local_witness(g, c);
    } else {
      throw Error(ErrorCode::Input, "unknown certificate kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "malformed " + kind + " certificate: " + e.what());
  }
  return Json{{"kind", kind}, {"verified", v.ok}, {"violations", v.violations}};
}

// ------------------------------------------------------------------- sweep

namespace {

std::vector<std::string> expand_family(const Json& fam) {
  if (fam.is_string()) return {fam.get<std::string>()};
  if (!fam.is_object()) throw Error(ErrorCode::Input, "family entries must be strings or objects");
  if (fam.contains("spec")) return {fam.at("spec").get<std::string>()};
  std::string tmpl = fam.at("template").get<std::string>();
  std::vector<std::string> out;
  for (const auto& [key, values] : fam.items()) {
    if (key == "template") continue;
    std::string hole = "{" + key + "}";
    for (const auto& val : values) {
      std::string s = tmpl;
      std::string text = val.is_string() ? val.get<std::string>() : val.dump();
      for (std::size_t at = s.find(hole); at != std::string::npos; at = s.find(hole, at + text.size()))
        s.replace(at, hole.size(), text);
      out.push_back(s);
    }
    break;
  }
  return out;
}

}  // namespace

Json run_sweep(const Json& config) {
  if (!config.is_object()) throw Error(ErrorCode::Input, "sweep config must be a JSON object");
  Json families = config.value("families", Json::array());
  std::vector<int> radii = config.value("r", std::vector<int>{1});
  std::vector<std::string> ops = config.value("operations", std::vector<std::string>{"wcol_heuristic"});
  std::uint64_t seed = config.value("seed", std::uint64_t{0});
  int budget = config.value("budget", 16);
  Json rows = Json::array();
  for (const auto& fam : families) {
    for (const std::string& spec : expand_family(fam)) {
      std::optional<Graph> g;
      std::string failure;
      try {
        g = generate(parse_generator_spec(spec));
      } catch (const Error& e) {
        failure = e.what();
      }
      for (const std::string& op : ops) {
        for (int r : radii) {
          Json row{{"graph", spec}, {"operation", op}, {"r", r}};
          if (!g) {
            row["error"] = failure;
            rows.push_back(row);
            continue;
          }
          row["n"] = g->size();
          row["m"] = g->edge_count();
          try {
            if (op == "wcol_heuristic") {
              auto a = wcol_heuristic(*g, r, OrderHeuristic::Degeneracy);
              auto b = wcol_heuristic(*g, r, OrderHeuristic::GreedyWReach);
              int dfs = wcol_of_order(*g, dfs_order(*g), r);
              row["value"] = std::min({a.value, b.value, dfs});
            } else if (op == "wcol_exact") {
              row["value"] = wcol_exact(*g, r).value;
            } else if (op == "density") {
              auto rep = density_report(*g, r, budget, seed);
              row["value"] = rep.density;
              row["bound"] = "lower";
            } else if (op == "cover") {
              VertexOrder order = coloring_number(*g).order;
              Cover c = neighborhood_cover(*g, r, order);
              row["value"] = c.max_degree;
              row["clusters"] = c.clusters.size();
            } else if (op == "col") {
              row["value"] = coloring_number(*g).value;
            } else if (op == "treedepth") {
              row["value"] = treedepth_exact(*g).value;
            } else {
              throw Error(ErrorCode::Input, "unknown sweep operation '" + op + "'");
            }
          } catch (const Error& e) {
            row["error"] = e.what();
            row["error_code"] = to_string(e.code());
          }
          rows.push_back(row);
        }
      }
    }
  }
  return Json{{"rows", rows}, {"seed", seed}, {"version", SPARSITY_VERSION}, {"rng", kRngAlgorithm}};
}

}  // namespace sparsity
