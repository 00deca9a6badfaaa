#pragma once

// Small helpers for graphs with at most 64 vertices stored as bitmasks.

#include <bit>
#include <cstdint>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

inline std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w : g.neighbors(v)) out[v] |= bit(w);
  return out;
}

inline Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

inline VertexSet set_of(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return VertexSet(std::move(out));
}

/// Vertices of `within` reachable from `from` (which must be inside `within`).
inline Mask reach(const std::vector<Mask>& nbr, Mask within, Mask from) {
  Mask seen = from & within;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nbr[lowest(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Eccentricity of `center` inside g[within]; -1 if some vertex is unreachable.
inline int eccentricity_in(const std::vector<Mask>& nbr, Mask within, Vertex center) {
  Mask seen = bit(center);
  Mask frontier = seen;
  int d = 0;
  while (true) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nbr[lowest(f)];
    next &= within & ~seen;
    if (!next) break;
    seen |= next;
    frontier = next;
    ++d;
  }
  return seen == within ? d : -1;
}

/// Radius of g[within] (minimum eccentricity), -1 when disconnected or empty.
inline int radius_in(const std::vector<Mask>& nbr, Mask within) {
  if (!within) return -1;
  int best = -1;
  for (Mask m = within; m; m &= m - 1) {
    int e = eccentricity_in(nbr, within, lowest(m));
    if (e < 0) return -1;
    if (best < 0 || e < best) best = e;
  }
  return best;
}

}  // namespace sparsity::detail
