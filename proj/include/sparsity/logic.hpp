#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

enum class FormulaOp { True, False, Edge, Eq, DistLe, DistGt, Pred, Not, And, Or, Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Atoms use x, y (and d for distance atoms; name for predicates).
/// Quantifiers bind x over `body`; when `relativized`, x ranges over the
/// d-ball around `y`.
struct Formula {
  FormulaOp op = FormulaOp::True;
  std::string x;
  std::string y;
  int d = 0;
  std::string name;
  bool relativized = false;
  FormulaPtr left;
  FormulaPtr right;
};

bool operator==(const Formula& a, const Formula& b);
bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_edge(std::string x, std::string y);
FormulaPtr f_eq(std::string x, std::string y);
FormulaPtr f_dist_le(std::string x, std::string y, int d);
FormulaPtr f_dist_gt(std::string x, std::string y, int d);
FormulaPtr f_pred(std::string name, std::string x);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(std::string x, FormulaPtr body);
FormulaPtr f_forall(std::string x, FormulaPtr body);
FormulaPtr f_exists_within(std::string x, int d, std::string anchor, FormulaPtr body);
FormulaPtr f_forall_within(std::string x, int d, std::string anchor, FormulaPtr body);

/// Grammar: `exists x [within d of y] . F`, `forall ...`, atoms `E(x,y)`,
/// `x = y`, `dist(x,y) <= d`, `dist(x,y) > d`, `true`, `false`, `P(x)`,
/// connectives `!` > `&` > `|`, parentheses. A quantifier body extends as far
/// right as possible. Syntax errors (ErrorCode::Parse) carry the position;
/// unbound variables (ErrorCode::Validation) are named.
FormulaPtr parse_formula(const std::string& text, const std::vector<std::string>& free_variables = {});

/// Re-parses to an equal tree.
std::string to_string(const FormulaPtr& f);

std::vector<std::string> free_variables(const FormulaPtr& f);
std::size_t quantifier_count(const FormulaPtr& f);
std::size_t atom_count(const FormulaPtr& f);

/// Replaces free occurrences of `from` by `to`. `to` must not be bound in f.
FormulaPtr substitute(const FormulaPtr& f, const std::string& from, const std::string& to);

using Assignment = std::map<std::string, Vertex>;
using Predicates = std::map<std::string, VertexSet>;

/// Plain semantics. The assignment must cover exactly the free variables
/// (ErrorCode::Input otherwise); predicates default to empty sets.
bool eval_naive(const Graph& g, const FormulaPtr& f, const Assignment& env = {}, const Predicates& preds = {});

/// True when every quantifier ranges within distance r of `center` (explicit
/// `within` or a leading distance guard) and every distance atom stays
/// inside that ball, so evaluation in the induced r-ball is exact.
bool is_local(const FormulaPtr& f, const std::string& center, int r, std::string* why = nullptr);

/// exists x1..xk: pairwise dist > 2r and chi(xi) for each i, with chi
/// r-local around its single free variable.
struct BasicLocalSentence {
  int k = 1;
  int r = 0;
  std::string variable = "x";
  FormulaPtr chi;
};

/// Parses chi with `variable` free and checks locality (ErrorCode::Validation).
BasicLocalSentence make_basic_local(int k, int r, const std::string& chi, const std::string& variable = "x");

/// The sentence as a plain formula, for the naive evaluator.
FormulaPtr expand_basic_local(const BasicLocalSentence& s);

struct LocalEvaluation {
  bool holds = false;
  VertexSet satisfying;
  std::optional<VertexSet> witness;
};

/// Evaluates chi on each induced r-ball, then searches for k satisfying
/// vertices pairwise at distance > 2r.
LocalEvaluation eval_basic_local(const Graph& g, const BasicLocalSentence& s, const Predicates& preds = {});

/// "g has a dominating set of size at most k" as a formula.
std::string dominating_formula(int k);

}  // namespace sparsity
