#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <array>

namespace fixtures {

using cover::Dart;
using cover::Perm;
using cover::Point;
using cover::Vertex;

ColoredGraph complete(std::uint32_t n) {
  EdgeList e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return cover::make_graph(n, e);
}

ColoredGraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  EdgeList e;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
  }
  return cover::make_graph(a + b, e);
}

ColoredGraph cycle(std::uint32_t n) {
  EdgeList e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return cover::make_graph(n, e);
}

ColoredGraph path(std::uint32_t n) {
  EdgeList e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return cover::make_graph(n, e);
}

ColoredGraph bouquet(std::uint32_t loops) { return cover::make_graph(1, EdgeList(loops, {0, 0})); }

EdgeList cube_edges() {
  EdgeList e;
  for (Vertex u = 0; u < 8; ++u) {
    for (Vertex bit = 1; bit < 8; bit <<= 1) {
      if ((u & bit) == 0) e.emplace_back(u, u | bit);
    }
  }
  return e;
}

// 0 on top, 1..5 upper ring, 6..10 lower ring, 11 at the bottom.
EdgeList icosahedron_edges() {
  EdgeList e;
  for (Vertex j = 0; j < 5; ++j) {
    const Vertex up = 1 + j, up_next = 1 + (j + 1) % 5;
    const Vertex lo = 6 + j, lo_next = 6 + (j + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up, lo_next);
    e.emplace_back(lo, lo_next);
    e.emplace_back(lo, 11);
  }
  return e;
}

EdgeList dodecahedron_edges() {
  const EdgeList ico = icosahedron_edges();
  std::set<std::pair<Vertex, Vertex>> adj;
  for (auto [u, v] : ico) {
    adj.insert({u, v});
    adj.insert({v, u});
  }
  std::vector<std::array<Vertex, 3>> faces;
  for (Vertex a = 0; a < 12; ++a) {
    for (Vertex b = a + 1; b < 12; ++b) {
      for (Vertex c = b + 1; c < 12; ++c) {
        if (adj.count({a, b}) && adj.count({b, c}) && adj.count({a, c})) faces.push_back({a, b, c});
      }
    }
  }
  EdgeList e;
  for (Vertex f = 0; f < faces.size(); ++f) {
    for (Vertex g = f + 1; g < faces.size(); ++g) {
      int shared = 0;
      for (Vertex x : faces[f]) shared += static_cast<int>(std::count(faces[g].begin(), faces[g].end(), x));
      if (shared == 2) e.emplace_back(f, g);
    }
  }
  return e;
}

namespace {

struct AutSearch {
  std::uint32_t n;
  std::vector<std::vector<bool>> adj;
  std::vector<Vertex> order;  // BFS order of the domain
  Perm image;
  std::vector<bool> used;
  std::vector<Perm> found;

  void extend(std::size_t depth) {
    if (depth == n) {
      found.push_back(image);
      return;
    }
    const Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const Vertex w = order[j];
        ok = adj[x][w] == adj[y][image[w]];
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      extend(depth + 1);
      used[y] = false;
    }
  }
};

}  // namespace

PermGroup automorphism_group(std::uint32_t n, const EdgeList& edges) {
  AutSearch s{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), {}, Perm(n, 0),
              std::vector<bool>(n, false), {}};
  for (auto [u, v] : edges) s.adj[u][v] = s.adj[v][u] = true;
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    s.order.push_back(root);
    for (std::size_t head = s.order.size() - 1; head < s.order.size(); ++head) {
      for (Vertex w = 0; w < n; ++w) {
        if (s.adj[s.order[head]][w] && !seen[w]) {
          seen[w] = true;
          s.order.push_back(w);
        }
      }
    }
  }
  s.extend(0);
  const PermGroup all = PermGroup::closure(n, s.found);
  return PermGroup::closure(n, cover::small_generating_set(all));
}

cover::ColorGraph single_edge() {
  cover::ColorGraph c;
  c.num_vertices = 2;
  c.darts = {{0, 1}, {1, 0}};
  return c;
}

cover::ColorGraph single_loop() {
  cover::ColorGraph c;
  c.num_vertices = 1;
  c.darts = {{0, 1}, {0, 0}};
  return c;
}

cover::ColorGraph color_path(std::uint32_t n) {
  cover::ColorGraph c;
  c.num_vertices = n;
  for (Vertex j = 0; j + 1 < n; ++j) {
    c.darts.push_back({j, 2 * j + 1});
    c.darts.push_back({j + 1, 2 * j});
  }
  return c;
}

cover::SymGroup transitive(PermGroup g, Dart label) {
  cover::SymGroup out{std::move(g), 0, {}};
  out.star_size = out.group.degree();
  out.orbit_labels[0] = label;
  return out;
}

SymRestrictedData dodeca_cube() {
  SymRestrictedData d;
  d.color_graph = single_edge();
  d.groups.push_back(transitive(automorphism_group(20, dodecahedron_edges()), 0));
  d.groups.push_back(transitive(automorphism_group(8, cube_edges()), 1));
  return d;
}

SymRestrictedData icosa_cube() {
  SymRestrictedData d;
  d.color_graph = single_edge();
  d.groups.push_back(transitive(automorphism_group(12, icosahedron_edges()), 0));
  d.groups.push_back(transitive(automorphism_group(8, cube_edges()), 1));
  return d;
}

SymRestrictedData z4_loop() {
  SymRestrictedData d;
  d.color_graph = single_loop();
  const std::vector<Perm> gens = {
      {1, 0, 3, 2, 4, 5, 6, 7},  // (01)(23)
      {2, 3, 0, 1, 4, 5, 6, 7},  // (02)(13)
      {0, 1, 2, 3, 5, 6, 7, 4},  // (4567)
  };
  cover::SymGroup g{PermGroup::closure(8, gens), 8, {}};
  g.orbit_labels[0] = 0;
  g.orbit_labels[4] = 1;
  d.groups.push_back(std::move(g));
  return d;
}

SymRestrictedData path_data() {
  SymRestrictedData d;
  d.color_graph = color_path(3);
  const PermGroup s3 = PermGroup::closure(3, {{1, 2, 0}, {1, 0, 2}});
  d.groups.push_back(transitive(s3, 0));
  // Orbit {0,1,2} carries dart 1 (towards a), orbit {3,4,5} carries dart 2.
  cover::SymGroup mid{PermGroup::closure(6, {{1, 2, 0, 3, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 4, 5, 3}}), 6, {}};
  mid.orbit_labels[0] = 1;
  mid.orbit_labels[3] = 2;
  d.groups.push_back(std::move(mid));
  d.groups.push_back(transitive(s3, 3));
  return d;
}

}  // namespace fixtures
