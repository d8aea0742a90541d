#include "cover/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cover {

bool ColoredGraph::has_vertex_colors() const {
  return std::any_of(vertex_color.begin(), vertex_color.end(),
                     [](const auto& c) { return c.has_value(); });
}

bool ColoredGraph::has_dart_colors() const {
  return std::any_of(darts.begin(), darts.end(),
                     [](const DartRecord& d) { return d.color.has_value(); });
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDartTailOutOfRange: return "dart tail out of range";
    case ViolationKind::kBarOutOfRange: return "bar out of range";
    case ViolationKind::kHalfEdge: return "half-edge";
    case ViolationKind::kBarNotInvolutive: return "bar not involutive";
    case ViolationKind::kPartialVertexColors: return "partial vertex colors";
    case ViolationKind::kPartialDartColors: return "partial dart colors";
    case ViolationKind::kColorTailMismatch: return "color tail mismatch";
    case ViolationKind::kColorBarMismatch: return "color bar mismatch";
    case ViolationKind::kColorOutOfRange: return "color out of range";
    case ViolationKind::kNotConnected: return "not connected";
  }
  return "unknown";
}

namespace {

std::int64_t as_id(std::uint64_t x) { return static_cast<std::int64_t>(x); }

// Structural checks shared by both validate_graph overloads. Returns true
// when tails and bars are in range so that color checks may dereference.
bool validate_structure(const ColoredGraph& g, std::vector<Violation>& out) {
  const std::size_t nv = g.num_vertices();
  const std::size_t nd = g.num_darts();
  bool in_range = true;
  for (Dart e = 0; e < nd; ++e) {
    const DartRecord& d = g.darts[e];
    if (d.tail >= nv) {
      out.push_back({ViolationKind::kDartTailOutOfRange, {as_id(e)},
                     "dart " + std::to_string(e) + " has unknown tail " + std::to_string(d.tail)});
      in_range = false;
    }
    if (d.bar >= nd) {
      out.push_back({ViolationKind::kBarOutOfRange, {as_id(e)},
                     "dart " + std::to_string(e) + " has unknown bar " + std::to_string(d.bar)});
      in_range = false;
      continue;
    }
    if (d.bar == e) {
      out.push_back({ViolationKind::kHalfEdge, {as_id(e)},
                     "half-edge at dart " + std::to_string(e)});
    }
  }
  for (Dart e = 0; e < nd; ++e) {
    const Dart b = g.darts[e].bar;
    if (b >= nd || b == e) continue;
    if (g.darts[b].bar != e) {
      out.push_back({ViolationKind::kBarNotInvolutive, {as_id(b)},
                     "bar not involutive at " + std::to_string(b)});
    }
  }
  return in_range;
}

bool validate_color_presence(const ColoredGraph& g, std::vector<Violation>& out) {
  bool ok = true;
  if (g.has_vertex_colors()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!g.vertex_color[v]) {
        out.push_back({ViolationKind::kPartialVertexColors, {as_id(v)},
                       "vertex " + std::to_string(v) + " has no color"});
        ok = false;
      }
    }
  }
  if (g.has_dart_colors()) {
    for (Dart e = 0; e < g.num_darts(); ++e) {
      if (!g.darts[e].color) {
        out.push_back({ViolationKind::kPartialDartColors, {as_id(e)},
                       "dart " + std::to_string(e) + " has no color"});
        ok = false;
      }
    }
  }
  return ok;
}

bool involution_ok(const ColoredGraph& g) {
  for (Dart e = 0; e < g.num_darts(); ++e) {
    if (g.bar(g.bar(e)) != e) return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> validate_graph(const ColoredGraph& g) {
  std::vector<Violation> out;
  const bool in_range = validate_structure(g, out);
  const bool complete = validate_color_presence(g, out);
  if (!in_range || !complete || !involution_ok(g) || !g.has_dart_colors()) return out;

  // Implied color graph: dart color -> (tail color, bar color).
  struct Implied {
    Dart witness;
    std::optional<Color> tail_color;
    Color bar_color;
  };
  std::map<Color, Implied> implied;
  const bool vertex_colored = g.has_vertex_colors();
  for (Dart e = 0; e < g.num_darts(); ++e) {
    const Color c = *g.darts[e].color;
    const Color bc = *g.darts[g.bar(e)].color;
    std::optional<Color> tc;
    if (vertex_colored) tc = g.vertex_color[g.tail(e)];
    auto [it, inserted] = implied.try_emplace(c, Implied{e, tc, bc});
    if (inserted) continue;
    if (it->second.tail_color != tc) {
      out.push_back({ViolationKind::kColorTailMismatch, {as_id(it->second.witness), as_id(e)},
                     "darts " + std::to_string(it->second.witness) + " and " + std::to_string(e) +
                         " share color " + std::to_string(c) + " but have differently colored tails"});
    }
    if (it->second.bar_color != bc) {
      out.push_back({ViolationKind::kColorBarMismatch, {as_id(it->second.witness), as_id(e)},
                     "darts " + std::to_string(it->second.witness) + " and " + std::to_string(e) +
                         " share color " + std::to_string(c) + " but their bars differ in color"});
    }
  }
  for (const auto& [c, info] : implied) {
    auto back = implied.find(info.bar_color);
    if (back != implied.end() && back->second.bar_color != c) {
      out.push_back({ViolationKind::kColorBarMismatch, {as_id(info.witness)},
                     "bar of color " + std::to_string(c) + " is not an involution"});
    }
  }
  return out;
}

std::vector<Violation> validate_graph(const ColoredGraph& g, const ColorGraph& colors) {
  std::vector<Violation> out;
  const bool in_range = validate_structure(g, out);
  const bool complete = validate_color_presence(g, out);
  if (!in_range || !complete || !involution_ok(g)) return out;
  const bool vertex_colored = g.has_vertex_colors();
  if (vertex_colored) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Color c = *g.vertex_color[v];
      if (c < 0 || static_cast<std::size_t>(c) >= colors.num_vertices) {
        out.push_back({ViolationKind::kColorOutOfRange, {as_id(v)},
                       "vertex " + std::to_string(v) + " has undeclared color " + std::to_string(c)});
      }
    }
  }
  if (!g.has_dart_colors()) return out;
  for (Dart e = 0; e < g.num_darts(); ++e) {
    const Color c = *g.darts[e].color;
    if (c < 0 || static_cast<std::size_t>(c) >= colors.num_darts()) {
      out.push_back({ViolationKind::kColorOutOfRange, {as_id(e)},
                     "dart " + std::to_string(e) + " has undeclared color " + std::to_string(c)});
      continue;
    }
    const Dart k = static_cast<Dart>(c);
    if (*g.darts[g.bar(e)].color != static_cast<Color>(colors.bar(k))) {
      out.push_back({ViolationKind::kColorBarMismatch, {as_id(e)},
                     "color of bar(" + std::to_string(e) + ") is not the bar of its color"});
    }
    if (vertex_colored && *g.vertex_color[g.tail(e)] != static_cast<Color>(colors.d0(k))) {
      out.push_back({ViolationKind::kColorTailMismatch, {as_id(e)},
                     "tail color of dart " + std::to_string(e) + " differs from d0 of its color"});
    }
  }
  return out;
}

std::vector<Violation> validate_color_graph(const ColorGraph& c) {
  std::vector<Violation> out;
  for (Dart k = 0; k < c.num_darts(); ++k) {
    if (c.darts[k].tail >= c.num_vertices) {
      out.push_back({ViolationKind::kDartTailOutOfRange, {as_id(k)},
                     "color dart " + std::to_string(k) + " has unknown tail"});
    }
    if (c.darts[k].bar >= c.num_darts()) {
      out.push_back({ViolationKind::kBarOutOfRange, {as_id(k)},
                     "color dart " + std::to_string(k) + " has unknown bar"});
    } else if (c.darts[c.darts[k].bar].bar != k) {
      out.push_back({ViolationKind::kBarNotInvolutive, {as_id(c.darts[k].bar)},
                     "bar not involutive at " + std::to_string(c.darts[k].bar)});
    }
  }
  if (out.empty() && !is_connected(c)) {
    out.push_back({ViolationKind::kNotConnected, {}, "color graph is not connected"});
  }
  return out;
}

std::vector<Dart> star(const ColoredGraph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  std::vector<Dart> out;
  for (Dart e = 0; e < g.num_darts(); ++e) {
    if (g.tail(e) == v) out.push_back(e);
  }
  return out;
}

StarIndex::StarIndex(const ColoredGraph& g) : offsets_(g.num_vertices() + 1, 0) {
  for (const DartRecord& d : g.darts) ++offsets_[d.tail + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  darts_.resize(g.num_darts());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (Dart e = 0; e < g.num_darts(); ++e) darts_[fill[g.tail(e)]++] = e;
}

std::pair<std::size_t, std::vector<std::size_t>> component_labels(const ColoredGraph& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const StarIndex stars(g);
  std::vector<std::size_t> label(g.num_vertices(), kUnset);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
        const Vertex w = g.head(*e);
        if (label[w] == kUnset) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {count, std::move(label)};
}

bool is_connected(const ColoredGraph& g) {
  if (g.num_vertices() == 0) return false;
  return component_labels(g).first == 1;
}

Component connected_component(const ColoredGraph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  const auto [count, label] = component_labels(g);
  const std::size_t target = label[v];
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);

  Component out;
  std::vector<Vertex> new_vertex(g.num_vertices(), kAbsent);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (label[u] != target) continue;
    new_vertex[u] = static_cast<Vertex>(out.inclusion.vertex_map.size());
    out.inclusion.vertex_map.push_back(u);
    out.graph.vertex_color.push_back(g.vertex_color[u]);
  }
  std::vector<Dart> new_dart(g.num_darts(), kAbsent);
  for (Dart e = 0; e < g.num_darts(); ++e) {
    if (label[g.tail(e)] != target) continue;
    new_dart[e] = static_cast<Dart>(out.inclusion.dart_map.size());
    out.inclusion.dart_map.push_back(e);
  }
  out.graph.darts.reserve(out.inclusion.dart_map.size());
  for (const Dart e : out.inclusion.dart_map) {
    out.graph.darts.push_back({new_vertex[g.tail(e)], new_dart[g.bar(e)], g.darts[e].color});
  }
  return out;
}

bool is_connected(const ColorGraph& c) {
  if (c.num_vertices == 0) return false;
  std::vector<std::vector<Vertex>> adj(c.num_vertices);
  for (Dart k = 0; k < c.num_darts(); ++k) adj[c.d0(k)].push_back(c.d1(k));
  std::vector<bool> seen(c.num_vertices, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == c.num_vertices;
}

bool is_tree(const ColorGraph& c) {
  std::size_t geometric_edges = 0;
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const Dart kb = c.bar(k);
    if (kb == k) return false;
    if (c.d0(k) == c.d1(k)) return false;
    if (k < kb) ++geometric_edges;
  }
  return is_connected(c) && geometric_edges + 1 == c.num_vertices;
}

ColoredGraph make_graph(std::size_t num_vertices,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  ColoredGraph g;
  g.vertex_color.assign(num_vertices, std::nullopt);
  g.darts.reserve(2 * edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto [u, v] = edges[j];
    g.darts.push_back({u, static_cast<Dart>(2 * j + 1), std::nullopt});
    g.darts.push_back({v, static_cast<Dart>(2 * j), std::nullopt});
  }
  return g;
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  ColoredGraph out = a;
  const auto vshift = static_cast<Vertex>(a.num_vertices());
  const auto dshift = static_cast<Dart>(a.num_darts());
  out.vertex_color.insert(out.vertex_color.end(), b.vertex_color.begin(), b.vertex_color.end());
  for (const DartRecord& d : b.darts) {
    out.darts.push_back({d.tail + vshift, d.bar + dshift, d.color});
  }
  return out;
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  GraphMap out;
  out.vertex_map.reserve(inner.vertex_map.size());
  for (const Vertex v : inner.vertex_map) out.vertex_map.push_back(outer.vertex_map.at(v));
  out.dart_map.reserve(inner.dart_map.size());
  for (const Dart e : inner.dart_map) out.dart_map.push_back(outer.dart_map.at(e));
  return out;
}

GraphMap identity_map(const ColoredGraph& g) {
  GraphMap out;
  out.vertex_map.resize(g.num_vertices());
  std::iota(out.vertex_map.begin(), out.vertex_map.end(), Vertex{0});
  out.dart_map.resize(g.num_darts());
  std::iota(out.dart_map.begin(), out.dart_map.end(), Dart{0});
  return out;
}

}  // namespace cover
