#include "sparsity/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sparsity/error.hpp"
#include "sparsity/random.hpp"

namespace sparsity {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Collects edges with strictness handling shared by both readers.
class EdgeCollector {
 public:
  explicit EdgeCollector(Strictness s) : strictness_(s) {}

  void add(Vertex u, Vertex v, std::size_t line) {
    if (u == v) {
      if (strictness_ == Strictness::Strict)
        throw Error(ErrorCode::Validation, "line " + std::to_string(line) + ": self-loop");
      return;
    }
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    if (!seen_.insert(e).second) {
      if (strictness_ == Strictness::Strict)
        throw Error(ErrorCode::Validation, "line " + std::to_string(line) + ": duplicate edge");
      return;
    }
    edges_.push_back(e);
  }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Strictness strictness_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

long long parse_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, Strictness strictness) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  EdgeCollector edges(strictness);
  auto intern = [&](std::string_view name) {
    auto [it, inserted] = ids.emplace(std::string(name), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') return;
    if (tokens.size() != 2)
      parse_error(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    edges.add(u, v, line_no);
  });
  auto n = static_cast<Vertex>(labels.size());
  return Graph::from_edges(n, edges.edges(), std::move(labels));
}

Graph parse_dimacs(std::string_view text, Strictness strictness) {
  long long n = -1;
  EdgeCollector edges(strictness);
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (tokens.size() != 4) parse_error(line_no, "problem line must be 'p edge n m'");
      if (n >= 0) parse_error(line_no, "duplicate problem line");
      n = parse_int(tokens[2], line_no);
      if (n < 0) parse_error(line_no, "negative vertex count");
      return;
    }
    if (tokens[0] == "e") {
      if (n < 0) parse_error(line_no, "edge before problem line");
      if (tokens.size() != 3) parse_error(line_no, "edge line must be 'e u v'");
      long long u = parse_int(tokens[1], line_no);
      long long v = parse_int(tokens[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n) parse_error(line_no, "vertex id out of range");
      edges.add(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), line_no);
      return;
    }
    parse_error(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  });
  if (n < 0) n = 0;
  std::vector<std::string> labels;
  for (long long v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  return Graph::from_edges(static_cast<Vertex>(n), edges.edges(), std::move(labels));
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::string& path, Strictness strictness) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Input, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           std::string_view(path).substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".dimacs") || ends_with(".col") || ends_with(".gr"))
    return parse_dimacs(buf.str(), strictness);
  return parse_edge_list(buf.str(), strictness);
}

// ------------------------------------------------------------------ families

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::Input, msg);
}

}  // namespace

Graph path_graph(Vertex n) {
  require(n >= 0, "path: n must be >= 0");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(Vertex n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph grid_graph(Vertex rows, Vertex cols) {
  require(rows >= 1 && cols >= 1, "grid: rows and cols must be >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < rows; ++i)
    for (Vertex j = 0; j < cols; ++j) {
      Vertex v = i * cols + j;
      if (j + 1 < cols) e.emplace_back(v, v + 1);
      if (i + 1 < rows) e.emplace_back(v, v + cols);
    }
  return Graph::from_edges(rows * cols, e);
}

Graph complete_graph(Vertex n) {
  require(n >= 0, "complete: n must be >= 0");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph star_graph(Vertex leaves) {
  require(leaves >= 0, "star: n must be >= 0");
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  require(n >= 1, "random_tree: n must be >= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v);
  return Graph::from_edges(n, e);
}

Graph random_gnd(Vertex n, double d, std::uint64_t seed) {
  require(n >= 1, "gnd: n must be >= 1");
  require(d >= 0.0 && d <= n, "gnd: d must lie in [0, n]");
  Rng rng(seed);
  const double p = d / n;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph subdivide(const Graph& g, int r) {
  require(r >= 0, "subdivide: r must be >= 0");
  if (r == 0) return g;
  const auto base_edges = g.edges();
  const Vertex n = g.size() + static_cast<Vertex>(r * base_edges.size());
  std::vector<Edge> e;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  Vertex next = g.size();
  for (auto [u, v] : base_edges) {
    Vertex prev = u;
    for (int j = 0; j < r; ++j) {
      labels.push_back(g.label(u) + "~" + g.label(v) + "." + std::to_string(j + 1));
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  return Graph::from_edges(n, e, std::move(labels));
}

Graph apex(const Graph& g) {
  auto e = g.edges();
  const Vertex a = g.size();
  for (Vertex v = 0; v < a; ++v) e.emplace_back(v, a);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.push_back("apex");
  }
  return Graph::from_edges(a + 1, e, std::move(labels));
}

// -------------------------------------------------------------- spec parsing

namespace {

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names{
      {"path", Family::Path},         {"cycle", Family::Cycle},
      {"grid", Family::Grid},         {"complete", Family::Complete},
      {"star", Family::Star},         {"edgeless", Family::Edgeless},
      {"random_tree", Family::RandomTree}, {"gnd", Family::Gnd},
      {"subdivision", Family::Subdivision}, {"apex", Family::Apex}};
  return names;
}

std::string family_name(Family f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  return "?";
}

std::string format_double(double d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec parse() {
    GeneratorSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  GeneratorSpec parse_spec() {
    std::string name = identifier();
    auto it = family_names().find(name);
    if (it == family_names().end()) fail("unknown generator family '" + name + "'");
    GeneratorSpec spec;
    spec.family = it->second;
    std::set<std::string> given;
    skip_ws();
    if (consume('(')) {
      skip_ws();
      if (!consume(')')) {
        do {
          skip_ws();
          std::string key = identifier();
          skip_ws();
          if (!consume('=')) fail("expected '=' after '" + key + "'");
          skip_ws();
          if (!given.insert(key).second) fail("duplicate parameter '" + key + "'");
          assign(spec, key);
          skip_ws();
        } while (consume(','));
        if (!consume(')')) fail("expected ')'");
      }
    }
    validate(spec, given);
    return spec;
  }

  void assign(GeneratorSpec& spec, const std::string& key) {
    if (key == "base") {
      spec.base = std::make_shared<const GeneratorSpec>(parse_spec());
      return;
    }
    std::string tok = number();
    auto as_int = [&]() -> long long {
      long long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        fail("parameter '" + key + "' must be an integer");
      return v;
    };
    if (key == "n") spec.n = static_cast<Vertex>(as_int());
    else if (key == "rows") spec.rows = static_cast<Vertex>(as_int());
    else if (key == "cols") spec.cols = static_cast<Vertex>(as_int());
    else if (key == "r") spec.r = static_cast<int>(as_int());
    else if (key == "seed") {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) fail("seed must be a non-negative integer");
      spec.seed = v;
    } else if (key == "d") {
      try {
        std::size_t used = 0;
        spec.d = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail("parameter 'd' must be a number");
      }
    } else {
      fail("unknown parameter '" + key + "'");
    }
  }

  void validate(const GeneratorSpec& s, const std::set<std::string>& given) {
    auto need = [&](std::initializer_list<const char*> keys) {
      for (const char* k : keys)
        if (!given.count(k)) fail(family_name(s.family) + " requires parameter '" + k + "'");
      for (const auto& k : given) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) fail(family_name(s.family) + " does not take parameter '" + k + "'");
      }
    };
    switch (s.family) {
      case Family::Path:
      case Family::Cycle:
      case Family::Complete:
      case Family::Star:
      case Family::Edgeless: need({"n"}); break;
      case Family::Grid: need({"rows", "cols"}); break;
      case Family::RandomTree: need({"n", "seed"}); break;
      case Family::Gnd: need({"n", "d", "seed"}); break;
      case Family::Subdivision: need({"r", "base"}); break;
      case Family::Apex: need({"base"}); break;
    }
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '.' || text_[pos_] == '-' || text_[pos_] == 'e' ||
                                   text_[pos_] == '+'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::Parse, "generator spec at " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string GeneratorSpec::to_string() const {
  std::string s = family_name(family) + "(";
  auto seed_text = [&] { return std::to_string(seed.value_or(0)); };
  switch (family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete:
    case Family::Star:
    case Family::Edgeless: s += "n=" + std::to_string(n); break;
    case Family::Grid: s += "rows=" + std::to_string(rows) + ",cols=" + std::to_string(cols); break;
    case Family::RandomTree: s += "n=" + std::to_string(n) + ",seed=" + seed_text(); break;
    case Family::Gnd:
      s += "n=" + std::to_string(n) + ",d=" + format_double(d) + ",seed=" + seed_text();
      break;
    case Family::Subdivision: s += "r=" + std::to_string(r) + ",base=" + (base ? base->to_string() : "?"); break;
    case Family::Apex: s += "base=" + (base ? base->to_string() : "?"); break;
  }
  return s + ")";
}

Graph generate(const GeneratorSpec& spec) {
  auto need_seed = [&] {
    if (!spec.seed) throw Error(ErrorCode::Input, "randomized generator requires a seed");
    return *spec.seed;
  };
  auto need_base = [&]() -> const GeneratorSpec& {
    if (!spec.base) throw Error(ErrorCode::Input, "generator requires a base graph");
    return *spec.base;
  };
  switch (spec.family) {
    case Family::Path: return path_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Grid: return grid_graph(spec.rows, spec.cols);
    case Family::Complete: return complete_graph(spec.n);
    case Family::Star: return star_graph(spec.n);
    case Family::Edgeless:
      require(spec.n >= 0, "edgeless: n must be >= 0");
      return Graph(spec.n);
    case Family::RandomTree: return random_tree(spec.n, need_seed());
    case Family::Gnd: return random_gnd(spec.n, spec.d, need_seed());
    case Family::Subdivision: return subdivide(generate(need_base()), spec.r);
    case Family::Apex: return apex(generate(need_base()));
  }
  throw Error(ErrorCode::Internal, "unhandled generator family");
}

}  // namespace sparsity
