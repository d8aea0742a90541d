#include "cover/refinement.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace cover {

namespace {

constexpr std::int64_t kNoColor = std::numeric_limits<std::int64_t>::min();

std::int64_t color_key(const std::optional<Color>& c) { return c ? *c : kNoColor; }

// The disjoint union of the inputs in flat arrays; graph 0 comes first.
struct Union {
  std::size_t graphs = 0;
  std::vector<std::size_t> vertex_offset;  // per graph, plus end
  std::vector<std::size_t> dart_offset;
  std::vector<std::uint32_t> tail, bar;
  std::vector<std::int64_t> vertex_init, dart_init;
  std::vector<std::uint8_t> vertex_owner, dart_owner;
  std::vector<std::size_t> star_offset;
  std::vector<std::uint32_t> star_darts;

  std::size_t num_vertices() const { return vertex_init.size(); }
  std::size_t num_darts() const { return dart_init.size(); }
  std::uint32_t head(std::uint32_t e) const { return tail[bar[e]]; }
};

void check_compatible_colors(const ColoredGraph& g, const ColoredGraph& g2) {
  if (!g.has_dart_colors() || !g2.has_dart_colors()) return;
  struct Seen {
    std::int64_t tail_color;
    std::int64_t bar_color;
  };
  std::map<Color, Seen> implied;
  for (const ColoredGraph* h : {&g, &g2}) {
    for (Dart e = 0; e < h->num_darts(); ++e) {
      const Color c = *h->darts[e].color;
      const Seen s{color_key(h->vertex_color[h->tail(e)]), color_key(h->darts[h->bar(e)].color)};
      auto [it, inserted] = implied.try_emplace(c, s);
      if (!inserted && (it->second.tail_color != s.tail_color || it->second.bar_color != s.bar_color)) {
        throw IncompatibleColoring("dart color " + std::to_string(c) +
                                   " means different things in the two graphs");
      }
    }
  }
}

Union make_union(const ColoredGraph& g, const ColoredGraph* g2) {
  Union u;
  std::vector<const ColoredGraph*> parts{&g};
  if (g2 != nullptr) parts.push_back(g2);
  u.graphs = parts.size();
  u.vertex_offset.push_back(0);
  u.dart_offset.push_back(0);
  for (std::uint8_t p = 0; p < parts.size(); ++p) {
    const ColoredGraph& h = *parts[p];
    const auto vs = static_cast<std::uint32_t>(u.vertex_offset.back());
    const auto ds = static_cast<std::uint32_t>(u.dart_offset.back());
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      u.vertex_init.push_back(color_key(h.vertex_color[v]));
      u.vertex_owner.push_back(p);
    }
    for (Dart e = 0; e < h.num_darts(); ++e) {
      u.tail.push_back(h.tail(e) + vs);
      u.bar.push_back(h.bar(e) + ds);
      u.dart_init.push_back(color_key(h.darts[e].color));
      u.dart_owner.push_back(p);
    }
    u.vertex_offset.push_back(u.vertex_init.size());
    u.dart_offset.push_back(u.dart_init.size());
  }
  u.star_offset.assign(u.num_vertices() + 1, 0);
  for (const auto t : u.tail) ++u.star_offset[t + 1];
  std::partial_sum(u.star_offset.begin(), u.star_offset.end(), u.star_offset.begin());
  u.star_darts.resize(u.num_darts());
  std::vector<std::size_t> fill(u.star_offset.begin(), u.star_offset.end() - 1);
  for (std::uint32_t e = 0; e < u.num_darts(); ++e) u.star_darts[fill[u.tail[e]]++] = e;
  return u;
}

// Dense ids 0..count-1 for items ordered by `less`, equal items sharing an id.
template <typename Less>
std::size_t rank_items(std::size_t n, Less less, std::vector<std::uint32_t>& out) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), less);
  out.assign(n, 0);
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0 && less(order[j - 1], order[j])) ++count;
    out[order[j]] = static_cast<std::uint32_t>(count);
  }
  return n == 0 ? 0 : count + 1;
}

// Renumbers classes by their smallest member.
std::size_t canonical_renumber(std::vector<std::uint32_t>& cls) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> remap;
  std::size_t next = 0;
  for (auto& c : cls) {
    if (c >= remap.size()) remap.resize(c + 1, kUnset);
    if (remap[c] == kUnset) remap[c] = static_cast<std::uint32_t>(next++);
    c = remap[c];
  }
  return next;
}

bool some_class_one_sided(const std::vector<std::uint32_t>& cls, std::size_t count,
                          const std::vector<std::uint8_t>& owner) {
  std::vector<std::uint8_t> seen(count, 0);
  for (std::size_t x = 0; x < cls.size(); ++x) seen[cls[x]] |= static_cast<std::uint8_t>(1u << owner[x]);
  return std::any_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 3; });
}

struct Partition {
  std::vector<std::uint32_t> vertex_class;
  std::vector<std::uint32_t> dart_class;
  std::size_t vertex_count = 0;
  std::size_t dart_count = 0;
  std::size_t rounds = 0;
};

// Coarsest stable partition refining the initial colors. With
// `stop_if_one_sided`, returns nullopt as soon as some class lies entirely
// inside one graph; refinement only splits classes, so that is final.
std::optional<Partition> refine(const Union& u, bool stop_if_one_sided) {
  Partition p;
  const std::size_t nv = u.num_vertices();
  const std::size_t nd = u.num_darts();
  p.vertex_count = rank_items(
      nv, [&](std::uint32_t a, std::uint32_t b) { return u.vertex_init[a] < u.vertex_init[b]; },
      p.vertex_class);
  if (stop_if_one_sided && some_class_one_sided(p.vertex_class, p.vertex_count, u.vertex_owner)) {
    return std::nullopt;
  }

  std::vector<std::uint32_t> sorted_star(nd);
  std::vector<std::uint32_t> next;
  while (true) {
    ++p.rounds;
    const auto& vc = p.vertex_class;
    auto dart_key = [&](std::uint32_t e) {
      return std::make_tuple(u.dart_init[e], u.dart_init[u.bar[e]], vc[u.tail[e]], vc[u.head(e)]);
    };
    p.dart_count = rank_items(
        nd, [&](std::uint32_t a, std::uint32_t b) { return dart_key(a) < dart_key(b); },
        p.dart_class);
    if (stop_if_one_sided && some_class_one_sided(p.dart_class, p.dart_count, u.dart_owner)) {
      return std::nullopt;
    }

    for (std::uint32_t v = 0; v < nv; ++v) {
      const auto lo = u.star_offset[v], hi = u.star_offset[v + 1];
      for (auto j = lo; j < hi; ++j) sorted_star[j] = p.dart_class[u.star_darts[j]];
      std::sort(sorted_star.begin() + static_cast<std::ptrdiff_t>(lo),
                sorted_star.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    auto vertex_less = [&](std::uint32_t a, std::uint32_t b) {
      if (vc[a] != vc[b]) return vc[a] < vc[b];
      const auto a0 = sorted_star.begin() + static_cast<std::ptrdiff_t>(u.star_offset[a]);
      const auto a1 = sorted_star.begin() + static_cast<std::ptrdiff_t>(u.star_offset[a + 1]);
      const auto b0 = sorted_star.begin() + static_cast<std::ptrdiff_t>(u.star_offset[b]);
      const auto b1 = sorted_star.begin() + static_cast<std::ptrdiff_t>(u.star_offset[b + 1]);
      return std::lexicographical_compare(a0, a1, b0, b1);
    };
    const std::size_t count = rank_items(nv, vertex_less, next);
    if (count == p.vertex_count) break;
    p.vertex_class.swap(next);
    p.vertex_count = count;
    if (stop_if_one_sided && some_class_one_sided(p.vertex_class, p.vertex_count, u.vertex_owner)) {
      return std::nullopt;
    }
  }
  p.vertex_count = canonical_renumber(p.vertex_class);
  p.dart_count = canonical_renumber(p.dart_class);
  return p;
}

RefinedColoring to_coloring(const Union& u, const Partition& p) {
  RefinedColoring out;
  out.rounds = p.rounds;
  for (std::size_t g = 0; g < u.graphs; ++g) {
    out.vertex_class.emplace_back(p.vertex_class.begin() + static_cast<std::ptrdiff_t>(u.vertex_offset[g]),
                                  p.vertex_class.begin() + static_cast<std::ptrdiff_t>(u.vertex_offset[g + 1]));
    out.dart_class.emplace_back(p.dart_class.begin() + static_cast<std::ptrdiff_t>(u.dart_offset[g]),
                                p.dart_class.begin() + static_cast<std::ptrdiff_t>(u.dart_offset[g + 1]));
  }
  out.color_graph.num_vertices = p.vertex_count;
  out.color_graph.darts.resize(p.dart_count);
  std::vector<bool> done(p.dart_count, false);
  for (std::uint32_t e = 0; e < u.num_darts(); ++e) {
    const auto k = p.dart_class[e];
    if (done[k]) continue;
    done[k] = true;
    out.color_graph.darts[k] = {p.vertex_class[u.tail[e]], p.dart_class[u.bar[e]]};
  }
  return out;
}

}  // namespace

RefinedColoring joint_refinement(const ColoredGraph& g, const ColoredGraph* g2) {
  if (g2 != nullptr) check_compatible_colors(g, *g2);
  const Union u = make_union(g, g2);
  return to_coloring(u, *refine(u, false));
}

ColorGraphData quotient_color_graph(const RefinedColoring& coloring, const ColoredGraph& g,
                                    const ColoredGraph* g2) {
  std::vector<const ColoredGraph*> parts{&g};
  if (g2 != nullptr) parts.push_back(g2);
  if (parts.size() != coloring.num_graphs()) {
    throw std::invalid_argument("coloring covers a different number of graphs");
  }
  const ColorGraph& c = coloring.color_graph;
  ColorGraphData out;
  out.color_graph = c;
  out.r.assign(c.num_darts(), -1);

  std::vector<std::int64_t> at_vertex(c.num_darts(), 0);
  std::vector<std::vector<Dart>> darts_at(c.num_vertices);
  for (Dart k = 0; k < c.num_darts(); ++k) darts_at[c.d0(k)].push_back(k);

  for (std::size_t p = 0; p < parts.size(); ++p) {
    const ColoredGraph& h = *parts[p];
    const auto& vclass = coloring.vertex_class[p];
    const auto& dclass = coloring.dart_class[p];
    GraphCounts counts;
    counts.n.assign(c.num_vertices, 0);
    counts.m.assign(c.num_darts(), 0);
    for (Vertex v = 0; v < h.num_vertices(); ++v) ++counts.n[vclass[v]];
    for (Dart e = 0; e < h.num_darts(); ++e) ++counts.m[dclass[e]];

    const StarIndex stars(h);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
        const std::size_t k = dclass[*e];
        if (c.d0(static_cast<Dart>(k)) != vclass[v]) {
          throw std::logic_error("dart class tail disagrees with vertex class");
        }
        ++at_vertex[k];
      }
      for (const Dart k : darts_at[vclass[v]]) {
        if (out.r[k] < 0) out.r[k] = at_vertex[k];
        if (out.r[k] != at_vertex[k]) {
          throw std::logic_error("r_k not constant on dart class " + std::to_string(k));
        }
        at_vertex[k] = 0;
      }
    }
    out.counts.push_back(std::move(counts));
  }
  return out;
}

CoverDecision common_cover_exists(const ColoredGraph& g, const ColoredGraph& g2) {
  CoverDecision out;
  try {
    check_compatible_colors(g, g2);
  } catch (const IncompatibleColoring&) {
    return out;
  }
  const Union u = make_union(g, &g2);
  const auto partition = refine(u, true);
  if (!partition) return out;
  out.exists = true;
  out.coloring = to_coloring(u, *partition);
  out.data = quotient_color_graph(out.coloring, g, &g2);
  return out;
}

UnfoldedTree truncated_universal_cover(const ColoredGraph& g, Vertex root, std::size_t depth) {
  if (root >= g.num_vertices()) {
    throw std::out_of_range("unknown vertex " + std::to_string(root));
  }
  constexpr Dart kNone = std::numeric_limits<Dart>::max();
  const StarIndex stars(g);
  UnfoldedTree out;
  out.tree.vertex_color.push_back(g.vertex_color[root]);
  out.projection.vertex_map.push_back(root);

  struct Pending {
    Vertex node;
    Dart entered_by;  // g-dart from the parent, or kNone at the root
    std::size_t level;
  };
  std::deque<Pending> queue{{0, kNone, 0}};
  while (!queue.empty()) {
    const Pending cur = queue.front();
    queue.pop_front();
    if (cur.level == depth) continue;
    const Vertex here = out.projection.vertex_map[cur.node];
    for (const Dart* f = stars.begin(here); f != stars.end(here); ++f) {
      if (cur.entered_by != kNone && *f == g.bar(cur.entered_by)) continue;
      const auto child = static_cast<Vertex>(out.tree.num_vertices());
      const auto down = static_cast<Dart>(out.tree.num_darts());
      out.tree.vertex_color.push_back(g.vertex_color[g.head(*f)]);
      out.projection.vertex_map.push_back(g.head(*f));
      out.tree.darts.push_back({cur.node, down + 1, g.darts[*f].color});
      out.tree.darts.push_back({child, down, g.darts[g.bar(*f)].color});
      out.projection.dart_map.push_back(*f);
      out.projection.dart_map.push_back(g.bar(*f));
      queue.push_back({child, *f, cur.level + 1});
    }
  }
  out.canonical_code = rooted_tree_code(out.tree, 0);
  return out;
}

namespace {

std::string color_text(const std::optional<Color>& c) { return c ? std::to_string(*c) : "_"; }

std::string subtree_code(const ColoredGraph& tree, const StarIndex& stars, Vertex v, Dart from) {
  std::vector<std::string> children;
  for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
    if (*e == from) continue;
    const Dart back = tree.bar(*e);
    children.push_back("[" + color_text(tree.darts[*e].color) + "," +
                       color_text(tree.darts[back].color) +
                       subtree_code(tree, stars, tree.head(*e), back) + "]");
  }
  std::sort(children.begin(), children.end());
  std::string out = "(" + color_text(tree.vertex_color[v]);
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = v.size();
    for (const auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class CodeTable {
 public:
  std::int64_t intern(std::vector<std::int64_t> key) {
    auto [it, inserted] = ids_.try_emplace(std::move(key), static_cast<std::int64_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::vector<std::int64_t>, std::int64_t, VectorHash> ids_;
};

}  // namespace

std::string rooted_tree_code(const ColoredGraph& tree, Vertex root) {
  const StarIndex stars(tree);
  return subtree_code(tree, stars, root, std::numeric_limits<Dart>::max());
}

bool same_universal_cover_oracle(const ColoredGraph& g, const ColoredGraph& g2) {
  // Memoized unfolding: the subtree hanging below a dart e (entered at
  // head(e), t levels left) depends only on (e, t). Codes are interned in a
  // table shared by both graphs, so equal ids mean isomorphic subtrees.
  const std::size_t depth = g.num_vertices() + g2.num_vertices();
  const ColoredGraph* parts[2] = {&g, &g2};
  const StarIndex stars[2] = {StarIndex(g), StarIndex(g2)};
  CodeTable table;
  constexpr std::int64_t kEdgeTag = 1, kRootTag = 2;

  std::vector<std::int64_t> below[2];
  for (int p = 0; p < 2; ++p) {
    const ColoredGraph& h = *parts[p];
    below[p].resize(h.num_darts());
    for (Dart e = 0; e < h.num_darts(); ++e) {
      below[p][e] = table.intern({kEdgeTag, color_key(h.vertex_color[h.head(e)])});
    }
  }

  auto children_key = [&](int p, Vertex v, Dart skip, std::int64_t tag) {
    const ColoredGraph& h = *parts[p];
    std::vector<std::array<std::int64_t, 3>> kids;
    for (const Dart* f = stars[p].begin(v); f != stars[p].end(v); ++f) {
      if (*f == skip) continue;
      kids.push_back({color_key(h.darts[*f].color), color_key(h.darts[h.bar(*f)].color), below[p][*f]});
    }
    std::sort(kids.begin(), kids.end());
    std::vector<std::int64_t> key{tag, color_key(h.vertex_color[v])};
    for (const auto& k : kids) key.insert(key.end(), k.begin(), k.end());
    return key;
  };

  auto root_codes_intersect = [&](std::size_t level) {
    std::vector<std::int64_t> codes[2];
    for (int p = 0; p < 2; ++p) {
      for (Vertex v = 0; v < parts[p]->num_vertices(); ++v) {
        codes[p].push_back(level == 0 ? table.intern({kRootTag, color_key(parts[p]->vertex_color[v])})
                                      : table.intern(children_key(p, v, std::numeric_limits<Dart>::max(), kRootTag)));
      }
      std::sort(codes[p].begin(), codes[p].end());
    }
    std::vector<std::int64_t> common;
    std::set_intersection(codes[0].begin(), codes[0].end(), codes[1].begin(), codes[1].end(),
                          std::back_inserter(common));
    return !common.empty();
  };

  // Disjoint root codes at a shallow level stay disjoint at every deeper level.
  if (!root_codes_intersect(0)) return false;
  for (std::size_t level = 1; level <= depth; ++level) {
    if (!root_codes_intersect(level)) return false;
    if (level == depth) break;
    std::vector<std::int64_t> next[2];
    for (int p = 0; p < 2; ++p) {
      const ColoredGraph& h = *parts[p];
      next[p].resize(h.num_darts());
      for (Dart e = 0; e < h.num_darts(); ++e) {
        next[p][e] = table.intern(children_key(p, h.head(e), h.bar(e), kEdgeTag));
      }
    }
    below[0].swap(next[0]);
    below[1].swap(next[1]);
  }
  return true;
}

}  // namespace cover
