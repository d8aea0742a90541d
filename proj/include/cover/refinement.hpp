#pragma once

// Refined graph of colors via joint color refinement, the common-cover
// decision, and an independent universal-cover unfolding oracle.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cover/graph.hpp"

namespace cover {

class IncompatibleColoring : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stable joint partition of the vertices and darts of one or two graphs.
/// Class ids are shared across the graphs and numbered by their smallest
/// member in the disjoint union (graph 0 first). The classes double as the
/// vertex and dart colors of `color_graph`.
struct RefinedColoring {
  std::vector<std::vector<std::size_t>> vertex_class;  // [graph][vertex]
  std::vector<std::vector<std::size_t>> dart_class;    // [graph][dart]
  ColorGraph color_graph;
  std::size_t rounds = 0;

  std::size_t num_graphs() const { return vertex_class.size(); }
  std::size_t num_vertex_classes() const { return color_graph.num_vertices; }
  std::size_t num_dart_classes() const { return color_graph.num_darts(); }
};

RefinedColoring joint_refinement(const ColoredGraph& g, const ColoredGraph* g2 = nullptr);

struct GraphCounts {
  std::vector<std::int64_t> n;  // per vertex class
  std::vector<std::int64_t> m;  // per dart class
};

struct ColorGraphData {
  ColorGraph color_graph;
  std::vector<GraphCounts> counts;  // one entry per input graph
  std::vector<std::int64_t> r;      // k-darts at any d0(k)-vertex
};

/// Tallies n_i and m_k per graph and certifies r_k on every vertex.
/// Throws std::logic_error if r_k is not constant on a class.
ColorGraphData quotient_color_graph(const RefinedColoring& coloring, const ColoredGraph& g,
                                    const ColoredGraph* g2 = nullptr);

struct CoverDecision {
  bool exists = false;
  RefinedColoring coloring;  // filled only when exists
  ColorGraphData data;       // filled only when exists
};

/// Yes iff every refined class has members in both graphs.
CoverDecision common_cover_exists(const ColoredGraph& g, const ColoredGraph& g2);

struct UnfoldedTree {
  ColoredGraph tree;    // vertex 0 is the root
  GraphMap projection;  // tree -> g
  std::string canonical_code;
};

/// Non-backtracking unfolding of g from `root` down to `depth`, with its
/// projection to g. Children are numbered breadth-first in star order.
UnfoldedTree truncated_universal_cover(const ColoredGraph& g, Vertex root, std::size_t depth);

/// Canonical code of a rooted colored tree (AHU encoding with vertex and
/// edge colors). Equal codes iff the rooted trees are isomorphic.
std::string rooted_tree_code(const ColoredGraph& tree, Vertex root);

/// True iff some root pair has isomorphic unfoldings at depth
/// |V(g)| + |V(g2)|.
bool same_universal_cover_oracle(const ColoredGraph& g, const ColoredGraph& g2);

}  // namespace cover
