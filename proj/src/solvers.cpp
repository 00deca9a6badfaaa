#include "sparsity/solvers.hpp"

#include <algorithm>
#include <functional>

#include "bitset64.hpp"
#include "sparsity/error.hpp"
#include "sparsity/wideness.hpp"

namespace sparsity {

namespace {

// Branch on the vertex of highest remaining degree: take it (dropping its
// neighbors) or discard it. Isolated vertices are taken right away.
class IndependentSearch {
 public:
  IndependentSearch(std::vector<std::vector<Vertex>> adj, std::size_t k) : adj_(std::move(adj)), k_(k) {
    alive_.assign(adj_.size(), 1);
    degree_.resize(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) degree_[v] = adj_[v].size();
    remaining_ = adj_.size();
  }

  bool run() { return search(); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  void remove(std::size_t v, std::vector<std::size_t>& trail) {
    alive_[v] = 0;
    --remaining_;
    trail.push_back(v);
    for (Vertex w : adj_[v])
      if (alive_[w]) --degree_[w];
  }

  void restore(std::vector<std::size_t>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      std::size_t v = trail.back();
      trail.pop_back();
      alive_[v] = 1;
      ++remaining_;
      for (Vertex w : adj_[v])
        if (alive_[w]) ++degree_[w];
    }
  }

  void take(std::size_t v, std::vector<std::size_t>& trail) {
    chosen_.push_back(v);
    remove(v, trail);
    for (Vertex w : adj_[v])
      if (alive_[w]) remove(static_cast<std::size_t>(w), trail);
  }

  bool search() {
    if (chosen_.size() >= k_) return true;
    if (chosen_.size() + remaining_ < k_) return false;
    std::vector<std::size_t> trail;
    const std::size_t chosen_mark = chosen_.size();
    // Isolated vertices belong to some maximum solution.
    for (std::size_t v = 0; v < adj_.size() && chosen_.size() < k_; ++v)
      if (alive_[v] && degree_[v] == 0) take(v, trail);
    if (chosen_.size() >= k_) return true;

    std::size_t pick = adj_.size();
    for (std::size_t v = 0; v < adj_.size(); ++v)
      if (alive_[v] && (pick == adj_.size() || degree_[v] > degree_[pick])) pick = v;
    bool found = false;
    if (pick != adj_.size()) {
      std::size_t mark = trail.size();
      take(pick, trail);
      found = search();
      if (!found) {
        chosen_.pop_back();
        restore(trail, mark);
        remove(pick, trail);
        found = search();
      }
    }
    if (!found) {
      chosen_.resize(chosen_mark);
      restore(trail, 0);
    }
    return found;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t k_;
  std::vector<char> alive_;
  std::vector<std::size_t> degree_;
  std::size_t remaining_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<VertexSet> distance_independent_set(const Graph& g, int r, int k, const VertexSet& candidates,
                                                  const VertexOrder* order) {
  if (r < 0) throw Error(ErrorCode::Input, "distance_independent_set: r must be non-negative");
  for (Vertex v : candidates) require_vertex(g, v);
  if (k <= 0) return VertexSet{};
  if (candidates.size() < static_cast<std::size_t>(k)) return std::nullopt;

  if (order && r >= 1) {
    UqwCertificate quick = uqw_extract(g, candidates, r, static_cast<std::size_t>(k), *order);
    if (quick.s.empty() && quick.b.size() >= static_cast<std::size_t>(k)) {
      std::vector<Vertex> first(quick.b.begin(), quick.b.begin() + k);
      return VertexSet(std::move(first));
    }
  }

  // Power graph restricted to the candidates, indexed by candidate position.
  std::vector<Vertex> local(static_cast<std::size_t>(g.size()), kNoVertex);
  for (std::size_t i = 0; i < candidates.size(); ++i) local[candidates[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> adj(candidates.size());
  Bfs bfs(g);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (Vertex w : bfs.run(candidates[i], r))
      if (local[w] != kNoVertex && static_cast<std::size_t>(local[w]) != i) adj[i].push_back(local[w]);
  for (auto& row : adj) std::sort(row.begin(), row.end());

  IndependentSearch search(std::move(adj), static_cast<std::size_t>(k));
  if (!search.run()) return std::nullopt;
  std::vector<Vertex> out;
  for (std::size_t i : search.chosen()) out.push_back(candidates[i]);
  out.resize(static_cast<std::size_t>(k));
  return VertexSet(std::move(out));
}

namespace {

std::vector<Vertex> greedy_cover(const std::vector<VertexSet>& balls, Vertex n) {
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  Vertex left = n;
  std::vector<Vertex> out;
  while (left > 0) {
    Vertex best = kNoVertex;
    Vertex gain_best = -1;
    for (Vertex v = 0; v < n; ++v) {
      Vertex gain = 0;
      for (Vertex w : balls[v]) gain += !covered[w];
      if (gain > gain_best) {
        gain_best = gain;
        best = v;
      }
    }
    out.push_back(best);
    for (Vertex w : balls[best])
      if (!covered[w]) {
        covered[w] = 1;
        --left;
      }
  }
  return out;
}

std::vector<Vertex> exact_cover(const std::vector<VertexSet>& balls, Vertex n, std::vector<Vertex> incumbent) {
  using detail::Mask;
  std::vector<Mask> cover(static_cast<std::size_t>(n));
  std::vector<Mask> coverers(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    cover[v] = detail::mask_of(balls[v]);
    for (Vertex w : balls[v]) coverers[w] |= detail::bit(v);
  }
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Vertex> best = std::move(incumbent);
  std::vector<Vertex> current;
  std::function<void(Mask)> branch = [&](Mask uncovered) {
    if (!uncovered) {
      if (current.size() < best.size()) best = current;
      return;
    }
    if (current.size() + 1 >= best.size()) return;
    int widest = 0;
    for (Vertex v = 0; v < n; ++v) widest = std::max(widest, detail::popcount(cover[v] & uncovered));
    std::size_t need = static_cast<std::size_t>((detail::popcount(uncovered) + widest - 1) / widest);
    if (current.size() + need >= best.size()) return;
    // The uncovered vertex with the fewest ways to be covered.
    Vertex target = kNoVertex;
    for (Mask m = uncovered; m; m &= m - 1) {
      Vertex u = detail::lowest(m);
      if (target == kNoVertex || detail::popcount(coverers[u]) < detail::popcount(coverers[target])) target = u;
    }
    std::vector<Vertex> options;
    for (Mask m = coverers[target]; m; m &= m - 1) options.push_back(detail::lowest(m));
    std::stable_sort(options.begin(), options.end(), [&](Vertex a, Vertex b) {
      return detail::popcount(cover[a] & uncovered) > detail::popcount(cover[b] & uncovered);
    });
    for (Vertex v : options) {
      current.push_back(v);
      branch(uncovered & ~cover[v]);
      current.pop_back();
    }
  };
  branch(all);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

DominatingResult distance_dominating_set(const Graph& g, int r, DominationMode mode, Vertex max_vertices) {
  if (r < 0) throw Error(ErrorCode::Input, "distance_dominating_set: r must be non-negative");
  const Vertex n = g.size();
  const Vertex cap = std::min<Vertex>(max_vertices, 64);
  if (mode == DominationMode::Exact && n > cap) throw_cap_exceeded("distance_dominating_set (exact)", n, cap);
  std::vector<VertexSet> balls;
  balls.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) balls.push_back(ball(g, v, r));

  DominatingResult out;
  std::vector<Vertex> greedy = greedy_cover(balls, n);
  if (n <= cap) {
    std::vector<Vertex> best = exact_cover(balls, n, greedy);
    out.optimum = best.size();
    if (mode == DominationMode::Exact) {
      out.set = VertexSet(std::move(best));
      out.exact = true;
      return out;
    }
  }
  out.set = VertexSet(std::move(greedy));
  return out;
}

}  // namespace sparsity
