#pragma once

// Finite multigraphs in the dart formalism. A geometric edge is a pair of
// darts {e, bar(e)}; a loop is such a pair with tail(e) == head(e).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cover {

using Vertex = std::uint32_t;
using Dart = std::uint32_t;
using Color = std::int64_t;

struct DartRecord {
  Vertex tail = 0;
  Dart bar = 0;
  std::optional<Color> color;
  friend bool operator==(const DartRecord&, const DartRecord&) = default;
};

/// A finite multigraph with optional initial vertex and dart colors.
/// Vertex ids are 0..num_vertices()-1 and dart ids 0..num_darts()-1.
/// The struct may hold invalid data; validate_graph() reports it.
struct ColoredGraph {
  std::vector<std::optional<Color>> vertex_color;
  std::vector<DartRecord> darts;

  std::size_t num_vertices() const { return vertex_color.size(); }
  std::size_t num_darts() const { return darts.size(); }

  Vertex tail(Dart e) const { return darts[e].tail; }
  Dart bar(Dart e) const { return darts[e].bar; }
  Vertex head(Dart e) const { return darts[darts[e].bar].tail; }

  bool has_vertex_colors() const;
  bool has_dart_colors() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

struct ColorDart {
  Vertex tail = 0;
  Dart bar = 0;
  friend bool operator==(const ColorDart&, const ColorDart&) = default;
};

/// Graph of colors: vertex colors 0..num_vertices-1, dart colors
/// 0..darts.size()-1. Unlike ColoredGraph, bar-fixed darts (half-edges)
/// are allowed.
struct ColorGraph {
  std::size_t num_vertices = 0;
  std::vector<ColorDart> darts;

  std::size_t num_darts() const { return darts.size(); }
  Vertex d0(Dart k) const { return darts[k].tail; }
  Vertex d1(Dart k) const { return darts[darts[k].bar].tail; }
  Dart bar(Dart k) const { return darts[k].bar; }

  friend bool operator==(const ColorGraph&, const ColorGraph&) = default;
};

/// Vertex and dart components of a graph morphism H -> G.
struct GraphMap {
  std::vector<Vertex> vertex_map;
  std::vector<Dart> dart_map;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

enum class ViolationKind {
  kDartTailOutOfRange,
  kBarOutOfRange,
  kHalfEdge,
  kBarNotInvolutive,
  kPartialVertexColors,
  kPartialDartColors,
  kColorTailMismatch,
  kColorBarMismatch,
  kColorOutOfRange,
  kNotConnected,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::int64_t> ids;
  std::string message;
};

std::string to_string(ViolationKind kind);

/// Checks every ColoredGraph invariant and returns one entry per offence.
/// Without a declared color graph, the coloring is checked against the
/// color graph it implies: each dart color needs a single tail color and a
/// single bar color, and the bar color of the bar color is the color itself.
std::vector<Violation> validate_graph(const ColoredGraph& g);

/// As above, but dart colors must be darts of `colors` and vertex colors
/// its vertices, with color(tail e) = d0(color e) and color(bar e) =
/// bar(color e).
std::vector<Violation> validate_graph(const ColoredGraph& g, const ColorGraph& colors);

std::vector<Violation> validate_color_graph(const ColorGraph& c);

/// Darts with tail v in ascending id order. Throws std::out_of_range for
/// an unknown vertex.
std::vector<Dart> star(const ColoredGraph& g, Vertex v);

/// Compressed per-vertex stars for repeated lookups; same order as star().
class StarIndex {
 public:
  explicit StarIndex(const ColoredGraph& g);

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  const Dart* begin(Vertex v) const { return darts_.data() + offsets_[v]; }
  const Dart* end(Vertex v) const { return darts_.data() + offsets_[v + 1]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Dart> darts_;
};

bool is_connected(const ColoredGraph& g);

struct Component {
  ColoredGraph graph;
  GraphMap inclusion;  // component -> original
};

/// The connected component containing v, renumbered in ascending order of
/// the original ids. Throws std::out_of_range for an unknown vertex.
Component connected_component(const ColoredGraph& g, Vertex v);

/// Number of connected components and a component index per vertex.
std::pair<std::size_t, std::vector<std::size_t>> component_labels(const ColoredGraph& g);

/// True iff c is an ordinary tree: a bar-fixed dart or a loop makes the
/// answer false.
bool is_tree(const ColorGraph& c);

bool is_connected(const ColorGraph& c);

/// Builds a graph from an edge list. Edge j yields darts 2j (u -> v) and
/// 2j + 1 (v -> u).
ColoredGraph make_graph(std::size_t num_vertices,
                        const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Disjoint union; vertices and darts of b are shifted past those of a.
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

/// Composition outer ∘ inner for maps A -(inner)-> B -(outer)-> C.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

GraphMap identity_map(const ColoredGraph& g);

}  // namespace cover
