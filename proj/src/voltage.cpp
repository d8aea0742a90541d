#include "cover/voltage.hpp"

#include <stdexcept>

#include "cover/random.hpp"

namespace cover {

ColoredGraph voltage_lift(const ColoredGraph& base, const std::vector<Perm>& voltage) {
  if (voltage.size() != base.num_darts()) throw std::invalid_argument("one voltage per dart required");
  const std::size_t d = base.num_darts() == 0 ? 1 : voltage.front().size();
  for (Dart e = 0; e < base.num_darts(); ++e) {
    if (voltage[e].size() != d || compose(voltage[e], voltage[base.bar(e)]) != identity_perm(d)) {
      throw std::invalid_argument("voltage of bar(" + std::to_string(e) + ") is not the inverse");
    }
  }
  ColoredGraph out;
  out.vertex_color.reserve(base.num_vertices() * d);
  for (Vertex v = 0; v < base.num_vertices(); ++v) {
    for (std::size_t x = 0; x < d; ++x) out.vertex_color.push_back(base.vertex_color[v]);
  }
  out.darts.reserve(base.num_darts() * d);
  for (Dart e = 0; e < base.num_darts(); ++e) {
    for (std::size_t x = 0; x < d; ++x) {
      const Point y = voltage[e][x];
      out.darts.push_back({static_cast<Vertex>(base.tail(e) * d + x),
                           static_cast<Dart>(base.bar(e) * d + y), base.darts[e].color});
    }
  }
  return out;
}

Component random_voltage_lift(const ColoredGraph& base, std::uint32_t degree, std::mt19937_64& rng,
                              GraphMap* projection) {
  if (degree == 0) throw std::invalid_argument("lift degree must be positive");
  std::vector<Perm> voltage(base.num_darts());
  for (Dart e = 0; e < base.num_darts(); ++e) {
    const Dart b = base.bar(e);
    if (b < e) continue;
    voltage[e] = random_permutation(rng, degree);
    voltage[b] = inverse(voltage[e]);
  }
  const ColoredGraph lift = voltage_lift(base, voltage);
  Component comp = connected_component(lift, 0);
  if (projection != nullptr) {
    projection->vertex_map.clear();
    projection->dart_map.clear();
    for (const Vertex v : comp.inclusion.vertex_map) projection->vertex_map.push_back(v / degree);
    for (const Dart e : comp.inclusion.dart_map) projection->dart_map.push_back(e / degree);
  }
  return comp;
}

ColoredGraph random_connected_multigraph(std::uint32_t n, std::uint32_t extra_edges, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("graph needs a vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto order = random_permutation(rng, n);
  for (std::uint32_t j = 1; j < n; ++j) {
    edges.emplace_back(order[static_cast<std::uint32_t>(uniform_below(rng, j))], order[j]);
  }
  for (std::uint32_t j = 0; j < extra_edges; ++j) {
    edges.emplace_back(static_cast<Vertex>(uniform_below(rng, n)), static_cast<Vertex>(uniform_below(rng, n)));
  }
  return make_graph(n, edges);
}

}  // namespace cover
