#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "sparsity/graph.hpp"

namespace sparsity {

enum class Strictness {
  Strict,   // duplicate edges and self-loops are errors
  Lenient,  // duplicates merged, self-loops dropped
};

/// Parses a whitespace-separated edge list: one "u v" pair per line, '#'
/// comments and blank lines ignored. Vertex tokens are arbitrary names; ids
/// are assigned by first appearance and the names kept as labels.
Graph parse_edge_list(std::string_view text, Strictness strictness = Strictness::Lenient);

/// DIMACS "p edge n m" / "e u v" format with 1-based ids, "c" comments.
Graph parse_dimacs(std::string_view text, Strictness strictness = Strictness::Lenient);

/// Edge list using labels as vertex names. Isolated vertices are not
/// representable in this format and are dropped.
std::string write_edge_list(const Graph& g);

/// Reads a file, choosing DIMACS for .dimacs/.col/.gr and the edge list
/// otherwise.
Graph read_graph_file(const std::string& path, Strictness strictness = Strictness::Lenient);

// ------------------------------------------------------------------ generators

enum class Family { Path, Cycle, Grid, Complete, Star, Edgeless, RandomTree, Gnd, Subdivision, Apex };

struct GeneratorSpec {
  Family family = Family::Path;
  Vertex n = 0;
  Vertex rows = 0;
  Vertex cols = 0;
  int r = 0;
  double d = 0.0;
  std::optional<std::uint64_t> seed;
  std::shared_ptr<const GeneratorSpec> base;

  /// Canonical text form, e.g. "subdivision(r=1,base=complete(n=4))".
  std::string to_string() const;
};

/// Parses "family(key=value,...)"; nested bases use the same syntax.
GeneratorSpec parse_generator_spec(std::string_view text);

/// Deterministic given the spec (including its seed).
Graph generate(const GeneratorSpec& spec);

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph grid_graph(Vertex rows, Vertex cols);
Graph complete_graph(Vertex n);
/// K_{1,leaves} with the center at id 0.
Graph star_graph(Vertex leaves);
/// Vertex i > 0 attaches to a uniformly random earlier vertex.
Graph random_tree(Vertex n, std::uint64_t seed);
/// Erdos-Renyi G(n, d/n): every pair independently with probability d/n.
Graph random_gnd(Vertex n, double d, std::uint64_t seed);

/// Replaces every edge by a path with r inner vertices. Branch vertices keep
/// ids 0..n-1; the inner vertices of the e-th edge (in edges() order) get ids
/// n + e*r .. n + e*r + r - 1, ordered from the smaller endpoint.
Graph subdivide(const Graph& g, int r);

/// Adds one vertex (id n) adjacent to every vertex of g.
Graph apex(const Graph& g);

}  // namespace sparsity
