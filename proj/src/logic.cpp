#include "sparsity/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>

#include "sparsity/error.hpp"
#include "sparsity/solvers.hpp"

namespace sparsity {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

Formula node(FormulaOp op, std::string x = {}, std::string y = {}, int d = 0) {
  Formula f;
  f.op = op;
  f.x = std::move(x);
  f.y = std::move(y);
  f.d = d;
  return f;
}

bool is_quantifier(FormulaOp op) { return op == FormulaOp::Exists || op == FormulaOp::Forall; }
bool is_binary(FormulaOp op) { return op == FormulaOp::And || op == FormulaOp::Or; }

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  return a.op == b.op && a.x == b.x && a.y == b.y && a.d == b.d && a.name == b.name &&
         a.relativized == b.relativized && same_formula(a.left, b.left) && same_formula(a.right, b.right);
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

FormulaPtr f_true() { return make(node(FormulaOp::True)); }
FormulaPtr f_false() { return make(node(FormulaOp::False)); }
FormulaPtr f_edge(std::string x, std::string y) { return make(node(FormulaOp::Edge, std::move(x), std::move(y))); }
FormulaPtr f_eq(std::string x, std::string y) { return make(node(FormulaOp::Eq, std::move(x), std::move(y))); }
FormulaPtr f_dist_le(std::string x, std::string y, int d) {
  return make(node(FormulaOp::DistLe, std::move(x), std::move(y), d));
}
FormulaPtr f_dist_gt(std::string x, std::string y, int d) {
  return make(node(FormulaOp::DistGt, std::move(x), std::move(y), d));
}
FormulaPtr f_pred(std::string name, std::string x) {
  Formula f = node(FormulaOp::Pred, std::move(x));
  f.name = std::move(name);
  return make(std::move(f));
}
FormulaPtr f_not(FormulaPtr a) {
  Formula f = node(FormulaOp::Not);
  f.left = std::move(a);
  return make(std::move(f));
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  Formula f = node(FormulaOp::And);
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  Formula f = node(FormulaOp::Or);
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}

namespace {
FormulaPtr quantifier(FormulaOp op, std::string x, bool rel, int d, std::string anchor, FormulaPtr body) {
  Formula f = node(op, std::move(x), std::move(anchor), d);
  f.relativized = rel;
  f.left = std::move(body);
  return make(std::move(f));
}
}  // namespace

FormulaPtr f_exists(std::string x, FormulaPtr body) {
  return quantifier(FormulaOp::Exists, std::move(x), false, 0, "", std::move(body));
}
FormulaPtr f_forall(std::string x, FormulaPtr body) {
  return quantifier(FormulaOp::Forall, std::move(x), false, 0, "", std::move(body));
}
FormulaPtr f_exists_within(std::string x, int d, std::string anchor, FormulaPtr body) {
  return quantifier(FormulaOp::Exists, std::move(x), true, d, std::move(anchor), std::move(body));
}
FormulaPtr f_forall_within(std::string x, int d, std::string anchor, FormulaPtr body) {
  return quantifier(FormulaOp::Forall, std::move(x), true, d, std::move(anchor), std::move(body));
}

// ------------------------------------------------------------------ parser

namespace {

enum class Tok { Ident, Int, LParen, RParen, Comma, Dot, And, Or, Not, Eq, Le, Gt, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::Parse, "formula syntax error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
      continue;
    }
    switch (ch) {
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case ',': out.push_back({Tok::Comma, ",", start}); break;
      case '.': out.push_back({Tok::Dot, ".", start}); break;
      case '&': out.push_back({Tok::And, "&", start}); break;
      case '|': out.push_back({Tok::Or, "|", start}); break;
      case '!': out.push_back({Tok::Not, "!", start}); break;
      case '=': out.push_back({Tok::Eq, "=", start}); break;
      case '>': out.push_back({Tok::Gt, ">", start}); break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          out.push_back({Tok::Le, "<=", start});
          ++i;
          break;
        }
        syntax_error(start, "expected '<='");
      default:
        syntax_error(start, std::string("unexpected character '") + static_cast<char>(ch) + "'");
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"exists", "forall", "within", "of", "true", "false", "dist", "E"};
  return k;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& free) : tokens_(tokenize(text)) {
    for (const auto& v : free) scope_.push_back(v);
  }

  FormulaPtr parse() {
    FormulaPtr f = disjunction();
    if (peek().kind != Tok::End) syntax_error(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) syntax_error(peek().pos, std::string("expected ") + what);
    return next();
  }
  bool at_keyword(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

  std::string variable(bool must_be_bound) {
    const Token& t = expect(Tok::Ident, "a variable");
    if (keywords().count(t.text)) syntax_error(t.pos, "'" + t.text + "' is reserved");
    if (must_be_bound && std::find(scope_.begin(), scope_.end(), t.text) == scope_.end())
      throw Error(ErrorCode::Validation,
                  "scope error: variable '" + t.text + "' is unbound at position " + std::to_string(t.pos));
    return t.text;
  }

  int number() {
    const Token& t = expect(Tok::Int, "a non-negative integer");
    try {
      return std::stoi(t.text);
    } catch (const std::exception&) {
      syntax_error(t.pos, "integer out of range");
    }
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (accept(Tok::Or)) f = f_or(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (accept(Tok::And)) f = f_and(f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return f_not(unary());
    if (accept(Tok::LParen)) {
      FormulaPtr f = disjunction();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_keyword("exists") || at_keyword("forall")) return quantified();
    return atom();
  }

  FormulaPtr quantified() {
    FormulaOp op = next().text == "exists" ? FormulaOp::Exists : FormulaOp::Forall;
    std::string x = variable(false);
    bool rel = false;
    int d = 0;
    std::string anchor;
    if (at_keyword("within")) {
      next();
      rel = true;
      d = number();
      if (!at_keyword("of")) syntax_error(peek().pos, "expected 'of'");
      next();
      anchor = variable(true);
    }
    expect(Tok::Dot, "'.'");
    scope_.push_back(x);
    FormulaPtr body = disjunction();
    scope_.pop_back();
    return quantifier(op, x, rel, d, anchor, body);
  }

  FormulaPtr atom() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) syntax_error(t.pos, t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
    if (t.text == "true") {
      next();
      return f_true();
    }
    if (t.text == "false") {
      next();
      return f_false();
    }
    if (t.text == "dist") {
      next();
      expect(Tok::LParen, "'('");
      std::string x = variable(true);
      expect(Tok::Comma, "','");
      std::string y = variable(true);
      expect(Tok::RParen, "')'");
      if (accept(Tok::Le)) return f_dist_le(x, y, number());
      if (accept(Tok::Gt)) return f_dist_gt(x, y, number());
      syntax_error(peek().pos, "expected '<=' or '>' after dist(...)");
    }
    if (t.text == "E") {
      next();
      expect(Tok::LParen, "'('");
      std::string x = variable(true);
      expect(Tok::Comma, "','");
      std::string y = variable(true);
      expect(Tok::RParen, "')'");
      return f_edge(x, y);
    }
    if (keywords().count(t.text)) syntax_error(t.pos, "unexpected '" + t.text + "'");
    // Predicate P(x) or equality x = y.
    if (tokens_[at_ + 1].kind == Tok::LParen) {
      std::string name = next().text;
      next();
      std::string x = variable(true);
      expect(Tok::RParen, "')'");
      return f_pred(name, x);
    }
    std::string x = variable(true);
    expect(Tok::Eq, "'='");
    std::string y = variable(true);
    return f_eq(x, y);
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::vector<std::string> scope_;
};

void print(const FormulaPtr& f, std::string& out);

void print_child(const FormulaPtr& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const FormulaPtr& f, std::string& out) {
  switch (f->op) {
    case FormulaOp::True: out += "true"; return;
    case FormulaOp::False: out += "false"; return;
    case FormulaOp::Edge: out += "E(" + f->x + "," + f->y + ")"; return;
    case FormulaOp::Eq: out += f->x + " = " + f->y; return;
    case FormulaOp::DistLe: out += "dist(" + f->x + "," + f->y + ") <= " + std::to_string(f->d); return;
    case FormulaOp::DistGt: out += "dist(" + f->x + "," + f->y + ") > " + std::to_string(f->d); return;
    case FormulaOp::Pred: out += f->name + "(" + f->x + ")"; return;
    case FormulaOp::Not: {
      out += '!';
      FormulaOp c = f->left->op;
      print_child(f->left, is_binary(c) || is_quantifier(c) || c == FormulaOp::Eq || c == FormulaOp::DistLe ||
                               c == FormulaOp::DistGt, out);
      return;
    }
    case FormulaOp::And:
    case FormulaOp::Or: {
      bool conj = f->op == FormulaOp::And;
      FormulaOp l = f->left->op, r = f->right->op;
      print_child(f->left, is_quantifier(l) || (conj && l == FormulaOp::Or), out);
      out += conj ? " & " : " | ";
      print_child(f->right, is_quantifier(r) || (is_binary(r) && (conj || r == FormulaOp::Or)), out);
      return;
    }
    case FormulaOp::Exists:
    case FormulaOp::Forall:
      out += f->op == FormulaOp::Exists ? "exists " : "forall ";
      out += f->x;
      if (f->relativized) out += " within " + std::to_string(f->d) + " of " + f->y;
      out += " . ";
      print(f->left, out);
      return;
  }
}

void collect_free(const FormulaPtr& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  auto use = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end() && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  switch (f->op) {
    case FormulaOp::True:
    case FormulaOp::False: return;
    case FormulaOp::Pred: use(f->x); return;
    case FormulaOp::Edge:
    case FormulaOp::Eq:
    case FormulaOp::DistLe:
    case FormulaOp::DistGt:
      use(f->x);
      use(f->y);
      return;
    case FormulaOp::Not: collect_free(f->left, bound, out); return;
    case FormulaOp::And:
    case FormulaOp::Or:
      collect_free(f->left, bound, out);
      collect_free(f->right, bound, out);
      return;
    case FormulaOp::Exists:
    case FormulaOp::Forall:
      if (f->relativized) use(f->y);
      bound.push_back(f->x);
      collect_free(f->left, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text, const std::vector<std::string>& free_variables) {
  return Parser(text, free_variables).parse();
}

std::string to_string(const FormulaPtr& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<std::string> free_variables(const FormulaPtr& f) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t quantifier_count(const FormulaPtr& f) {
  if (!f) return 0;
  return (is_quantifier(f->op) ? 1 : 0) + quantifier_count(f->left) + quantifier_count(f->right);
}

std::size_t atom_count(const FormulaPtr& f) {
  if (!f) return 0;
  if (!f->left && !f->right) return 1;
  return atom_count(f->left) + atom_count(f->right);
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& from, const std::string& to) {
  auto swap = [&](const std::string& v) { return v == from ? to : v; };
  Formula copy = *f;
  switch (f->op) {
    case FormulaOp::True:
    case FormulaOp::False: return f;
    case FormulaOp::Pred:
    case FormulaOp::Edge:
    case FormulaOp::Eq:
    case FormulaOp::DistLe:
    case FormulaOp::DistGt:
      copy.x = swap(f->x);
      copy.y = f->op == FormulaOp::Pred ? f->y : swap(f->y);
      return make(std::move(copy));
    case FormulaOp::Not:
      copy.left = substitute(f->left, from, to);
      return make(std::move(copy));
    case FormulaOp::And:
    case FormulaOp::Or:
      copy.left = substitute(f->left, from, to);
      copy.right = substitute(f->right, from, to);
      return make(std::move(copy));
    case FormulaOp::Exists:
    case FormulaOp::Forall:
      if (f->x == to) throw Error(ErrorCode::Internal, "substitution would capture variable '" + to + "'");
      if (f->relativized) copy.y = swap(f->y);
      if (f->x != from) copy.left = substitute(f->left, from, to);
      return make(std::move(copy));
  }
  return f;
}

// --------------------------------------------------------------- evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const Graph& g, const Predicates& preds) : g_(g), preds_(preds), bfs_(g) {}

  bool eval(const FormulaPtr& f) {
    switch (f->op) {
      case FormulaOp::True: return true;
      case FormulaOp::False: return false;
      case FormulaOp::Edge: return g_.has_edge(value(f->x), value(f->y));
      case FormulaOp::Eq: return value(f->x) == value(f->y);
      case FormulaOp::DistLe: return within(value(f->x), value(f->y), f->d);
      case FormulaOp::DistGt: return !within(value(f->x), value(f->y), f->d);
      case FormulaOp::Pred: {
        auto it = preds_.find(f->name);
        return it != preds_.end() && it->second.contains(value(f->x));
      }
      case FormulaOp::Not: return !eval(f->left);
      case FormulaOp::And: return eval(f->left) && eval(f->right);
      case FormulaOp::Or: return eval(f->left) || eval(f->right);
      case FormulaOp::Exists:
      case FormulaOp::Forall: {
        const bool want = f->op == FormulaOp::Exists;
        std::vector<Vertex> range;
        if (f->relativized) {
          const auto& row = distances(value(f->y));
          for (Vertex v = 0; v < g_.size(); ++v)
            if (row[v] != kUnreached && row[v] <= f->d) range.push_back(v);
        } else {
          range = VertexSet::range(g_.size()).members();
        }
        bool result = !want;
        env_.emplace_back(f->x, kNoVertex);
        for (Vertex v : range) {
          env_.back().second = v;
          if (eval(f->left) == want) {
            result = want;
            break;
          }
        }
        env_.pop_back();
        return result;
      }
    }
    return false;
  }

  std::vector<std::pair<std::string, Vertex>> env_;

 private:
  Vertex value(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (it->first == name) return it->second;
    throw Error(ErrorCode::Input, "variable '" + name + "' has no value");
  }

  const std::vector<int>& distances(Vertex from) {
    auto it = rows_.find(from);
    if (it != rows_.end()) return it->second;
    std::vector<int> row(static_cast<std::size_t>(g_.size()), kUnreached);
    for (Vertex v : bfs_.run(from, -1)) row[v] = bfs_.dist(v);
    return rows_.emplace(from, std::move(row)).first->second;
  }

  bool within(Vertex a, Vertex b, int d) {
    int dist = distances(a)[b];
    return dist != kUnreached && dist <= d;
  }

  const Graph& g_;
  const Predicates& preds_;
  Bfs bfs_;
  std::unordered_map<Vertex, std::vector<int>> rows_;
};

}  // namespace

bool eval_naive(const Graph& g, const FormulaPtr& f, const Assignment& env, const Predicates& preds) {
  auto free = free_variables(f);
  std::vector<std::string> given;
  for (const auto& [name, v] : env) {
    given.push_back(name);
    require_vertex(g, v);
  }
  if (given != free) {
    std::string want;
    for (const auto& v : free) want += (want.empty() ? "" : ", ") + v;
    throw Error(ErrorCode::Input, "assignment must cover exactly the free variables {" + want + "}");
  }
  Evaluator ev(g, preds);
  for (const auto& [name, v] : env) ev.env_.emplace_back(name, v);
  return ev.eval(f);
}

// ----------------------------------------------------------------- locality

namespace {

// reach[v] = largest possible distance of v's value from the center.
bool local_check(const FormulaPtr& f, std::map<std::string, int>& reach, int r, std::string& why) {
  auto bound = [&](const std::string& v) -> int {
    auto it = reach.find(v);
    return it == reach.end() ? -1 : it->second;
  };
  auto dist_ok = [&](const Formula& a) {
    int bx = bound(a.x), by = bound(a.y);
    if (bx < 0 || by < 0 || bx + by + a.d > 2 * r) {
      why = "distance atom dist(" + a.x + "," + a.y + ") may leave the " + std::to_string(r) + "-ball";
      return false;
    }
    return true;
  };
  switch (f->op) {
    case FormulaOp::True:
    case FormulaOp::False:
    case FormulaOp::Edge:
    case FormulaOp::Eq:
    case FormulaOp::Pred: return true;
    case FormulaOp::DistLe:
    case FormulaOp::DistGt: return dist_ok(*f);
    case FormulaOp::Not: return local_check(f->left, reach, r, why);
    case FormulaOp::And:
    case FormulaOp::Or: return local_check(f->left, reach, r, why) && local_check(f->right, reach, r, why);
    case FormulaOp::Exists:
    case FormulaOp::Forall: {
      int limit = -1;
      FormulaPtr body = f->left;
      if (f->relativized) {
        int b = bound(f->y);
        if (b >= 0) limit = b + f->d;
      } else {
        // exists y . dist(z,y) <= d & ...   /   forall y . dist(z,y) > d | ...
        FormulaOp joint = f->op == FormulaOp::Exists ? FormulaOp::And : FormulaOp::Or;
        FormulaOp guard = f->op == FormulaOp::Exists ? FormulaOp::DistLe : FormulaOp::DistGt;
        if (body->op == joint && body->left->op == guard) {
          const Formula& gd = *body->left;
          std::string other = gd.x == f->x ? gd.y : (gd.y == f->x ? gd.x : "");
          if (!other.empty() && other != f->x && bound(other) >= 0) {
            limit = bound(other) + gd.d;
            body = body->right;
          }
        }
      }
      if (limit < 0 || limit > r) {
        why = "quantifier over '" + f->x + "' is not confined to the " + std::to_string(r) + "-ball";
        return false;
      }
      auto saved = reach.find(f->x) == reach.end() ? std::optional<int>() : std::optional<int>(reach[f->x]);
      reach[f->x] = limit;
      bool ok = local_check(body, reach, r, why);
      if (saved) reach[f->x] = *saved;
      else reach.erase(f->x);
      return ok;
    }
  }
  return false;
}

}  // namespace

bool is_local(const FormulaPtr& f, const std::string& center, int r, std::string* why) {
  std::map<std::string, int> reach{{center, 0}};
  std::string reason;
  bool ok = local_check(f, reach, r, reason);
  if (why) *why = reason;
  return ok;
}

BasicLocalSentence make_basic_local(int k, int r, const std::string& chi, const std::string& variable) {
  if (k < 1) throw Error(ErrorCode::Input, "basic local sentence needs k >= 1");
  if (r < 0) throw Error(ErrorCode::Input, "basic local sentence needs r >= 0");
  BasicLocalSentence s;
  s.k = k;
  s.r = r;
  s.variable = variable;
  s.chi = parse_formula(chi, {variable});
  std::string why;
  if (!is_local(s.chi, variable, r, &why))
    throw Error(ErrorCode::Validation, "formula is not " + std::to_string(r) + "-local around '" + variable + "': " + why);
  return s;
}

namespace {

void collect_names(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (!f->x.empty()) out.insert(f->x);
  if (!f->y.empty()) out.insert(f->y);
  collect_names(f->left, out);
  collect_names(f->right, out);
}

}  // namespace

FormulaPtr expand_basic_local(const BasicLocalSentence& s) {
  std::set<std::string> taken;
  collect_names(s.chi, taken);
  std::string stem = "w";
  auto clashes = [&](const std::string& base) {
    for (int i = 1; i <= s.k; ++i)
      if (taken.count(base + std::to_string(i))) return true;
    return false;
  };
  while (clashes(stem)) stem += "_";
  std::vector<std::string> names;
  for (int i = 1; i <= s.k; ++i) names.push_back(stem + std::to_string(i));

  FormulaPtr body;
  auto conj = [&](FormulaPtr f) { body = body ? f_and(body, f) : f; };
  for (int i = 0; i < s.k; ++i)
    for (int j = i + 1; j < s.k; ++j) conj(f_dist_gt(names[i], names[j], 2 * s.r));
  for (int i = 0; i < s.k; ++i) conj(substitute(s.chi, s.variable, names[i]));
  for (int i = s.k - 1; i >= 0; --i) body = f_exists(names[i], body);
  return body;
}

LocalEvaluation eval_basic_local(const Graph& g, const BasicLocalSentence& s, const Predicates& preds) {
  LocalEvaluation out;
  std::vector<Vertex> sat;
  auto chi_free = free_variables(s.chi);
  bool binds = std::find(chi_free.begin(), chi_free.end(), s.variable) != chi_free.end();
  for (Vertex v = 0; v < g.size(); ++v) {
    Subgraph local = induced_subgraph(g, ball(g, v, s.r));
    Predicates local_preds;
    for (const auto& [name, set] : preds) {
      std::vector<Vertex> inside;
      for (Vertex w : set)
        if (g.contains(w) && local.to_local[w] != kNoVertex) inside.push_back(local.to_local[w]);
      local_preds.emplace(name, VertexSet(std::move(inside)));
    }
    Assignment env;
    if (binds) env.emplace(s.variable, local.local(v));
    if (eval_naive(local.graph, s.chi, env, local_preds)) sat.push_back(v);
  }
  out.satisfying = VertexSet(std::move(sat));
  out.witness = distance_independent_set(g, 2 * s.r, s.k, out.satisfying);
  out.holds = out.witness.has_value();
  return out;
}

std::string dominating_formula(int k) {
  if (k < 1) throw Error(ErrorCode::Input, "dominating formula needs k >= 1");
  std::string out;
  for (int i = 1; i <= k; ++i) out += "exists x" + std::to_string(i) + " . ";
  out += "forall y . (";
  for (int i = 1; i <= k; ++i) {
    if (i > 1) out += " | ";
    out += "y = x" + std::to_string(i);
  }
  for (int i = 1; i <= k; ++i) out += " | E(y,x" + std::to_string(i) + ")";
  out += ")";
  return out;
}

}  // namespace sparsity
