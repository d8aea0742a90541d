#include "cover/leighton.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cover/random.hpp"

namespace cover {

namespace {

std::int64_t checked_lcm(std::int64_t x, std::int64_t y) {
  const std::int64_t g = std::gcd(x, y);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x / g, y, &out)) {
    throw std::overflow_error("lcm overflows 64-bit integers");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("size overflows 64-bit integers");
  return out;
}

}  // namespace

CoverParameters cover_parameters(const ColorGraphData& data, SPolicy policy) {
  const ColorGraph& c = data.color_graph;
  if (data.counts.empty()) throw std::domain_error("no graph counts");
  const GraphCounts& first = data.counts[0];

  // Every vertex class with a dart has n_i | m_k; folding n_i in as well
  // only matters for a single edgeless vertex.
  CoverParameters out;
  out.s = 1;
  const std::size_t graphs = policy == SPolicy::kBothGraphsLcm ? data.counts.size() : 1;
  for (std::size_t p = 0; p < graphs; ++p) {
    for (const auto m : data.counts[p].m) out.s = checked_lcm(out.s, m);
  }
  for (const auto n : first.n) out.s = checked_lcm(out.s, n);

  out.a.resize(c.num_vertices);
  for (std::size_t i = 0; i < c.num_vertices; ++i) {
    if (first.n[i] <= 0 || out.s % first.n[i] != 0) throw std::domain_error("a_i is not integral");
    out.a[i] = out.s / first.n[i];
  }
  out.b.resize(c.num_darts());
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const std::int64_t r = data.r[k];
    if (r <= 0 || out.a[c.d0(k)] % r != 0) throw std::domain_error("b_k is not integral");
    out.b[k] = out.a[c.d0(k)] / r;
  }
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const Dart kb = c.bar(k);
    if (out.b[k] != out.b[kb] || out.a[c.d1(k)] != out.b[k] * data.r[kb] ||
        out.b[k] * first.m[k] != out.s) {
      throw std::domain_error("parameters violate b_k = a_i/r_k = a_j/r_kbar = b_kbar");
    }
  }
  for (const GraphCounts& counts : data.counts) {
    std::int64_t total = -1;
    for (std::size_t i = 0; i < c.num_vertices; ++i) {
      const std::int64_t t = checked_mul(counts.n[i], out.a[i]);
      if (total >= 0 && t != total) throw std::domain_error("n_i a_i depends on i");
      total = t;
    }
  }
  return out;
}

FiniteGroup cyclic_group(std::uint32_t order) {
  FiniteGroup g;
  g.order = order;
  g.product.resize(static_cast<std::size_t>(order) * order);
  g.inverse.resize(order);
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) g.product[x * order + y] = (x + y) % order;
    g.inverse[x] = (order - x) % order;
  }
  return g;
}

FiniteGroup group_from_table(std::uint32_t order, std::vector<std::uint32_t> product) {
  if (order == 0 || product.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("group table has the wrong size");
  }
  FiniteGroup g;
  g.order = order;
  g.product = std::move(product);
  g.inverse.assign(order, order);
  for (std::uint32_t x = 0; x < order; ++x) {
    std::vector<bool> row(order, false), col(order, false);
    for (std::uint32_t y = 0; y < order; ++y) {
      const auto xy = g.mul(x, y);
      const auto yx = g.mul(y, x);
      if (xy >= order || yx >= order || row[xy] || col[yx]) {
        throw std::invalid_argument("group table is not a Latin square");
      }
      row[xy] = col[yx] = true;
      if (xy == 0) g.inverse[x] = y;
    }
    if (g.mul(0, x) != x || g.mul(x, 0) != x) throw std::invalid_argument("element 0 is not the identity");
  }
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) {
      for (std::uint32_t z = 0; z < order; ++z) {
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
          throw std::invalid_argument("group table is not associative");
        }
      }
    }
  }
  return g;
}

namespace {

// psi for one graph: rank among same-class darts at each vertex, optionally
// pushed through a random permutation of Pi_k.
std::vector<std::uint32_t> make_psi(const ColoredGraph& g, const std::vector<std::size_t>& dclass,
                                    const ColorGraphData& data, std::mt19937_64* rng) {
  const StarIndex stars(g);
  std::vector<std::uint32_t> psi(g.num_darts(), 0);
  std::vector<std::uint32_t> rank(data.color_graph.num_darts(), 0);
  std::vector<std::size_t> classes_here;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    classes_here.clear();
    for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
      const std::size_t k = dclass[*e];
      if (rank[k] == 0) classes_here.push_back(k);
      psi[*e] = rank[k]++;
    }
    std::sort(classes_here.begin(), classes_here.end());
    if (rng != nullptr) {
      for (const std::size_t k : classes_here) {
        const auto shuffle = random_permutation(*rng, static_cast<std::uint32_t>(data.r[k]));
        for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
          if (dclass[*e] == k) psi[*e] = shuffle[psi[*e]];
        }
      }
    }
    for (const std::size_t k : classes_here) rank[k] = 0;
  }
  return psi;
}

}  // namespace

CoverBlueprint make_blueprint(const ColoredGraph& g, const ColoredGraph& g2,
                              const RefinedColoring& coloring, const ColorGraphData& data,
                              const CoverParameters& params, std::optional<std::uint64_t> seed) {
  CoverBlueprint out;
  out.a = params.a;
  const ColorGraph& c = data.color_graph;
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const auto r = static_cast<std::uint32_t>(data.r[k]);
    DartColorChoice choice;
    choice.group = cyclic_group(r);
    choice.b = params.b[k];
    choice.phi.resize(static_cast<std::size_t>(r * choice.b));
    for (std::uint32_t p = 0; p < r; ++p) {
      for (std::int64_t beta = 0; beta < choice.b; ++beta) {
        choice.phi[p * choice.b + beta] = static_cast<std::uint32_t>(p + r * beta);
      }
    }
    out.dart_colors.push_back(std::move(choice));
  }
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  std::mt19937_64* r = rng ? &*rng : nullptr;
  out.psi[0] = make_psi(g, coloring.dart_class[0], data, r);
  out.psi[1] = make_psi(g2, coloring.dart_class[1], data, r);
  return out;
}

void replace_group(CoverBlueprint& blueprint, const ColorGraph& color_graph, Dart k,
                   FiniteGroup group, std::vector<std::uint32_t> phi) {
  DartColorChoice& choice = blueprint.dart_colors.at(k);
  if (group.order != choice.group.order) {
    throw std::invalid_argument("replacement group has order " + std::to_string(group.order) +
                                ", expected " + std::to_string(choice.group.order));
  }
  const auto a = blueprint.a.at(color_graph.d0(k));
  if (static_cast<std::int64_t>(phi.size()) != a) throw std::invalid_argument("phi has the wrong size");
  std::vector<bool> hit(phi.size(), false);
  for (const auto alpha : phi) {
    if (alpha >= phi.size() || hit[alpha]) throw std::invalid_argument("phi is not a bijection");
    hit[alpha] = true;
  }
  choice.group = std::move(group);
  choice.phi = std::move(phi);
}

std::vector<std::string> validate_blueprint(const CoverBlueprint& blueprint, const ColoredGraph& g,
                                            const ColoredGraph& g2, const RefinedColoring& coloring,
                                            const ColorGraphData& data) {
  std::vector<std::string> out;
  const ColorGraph& c = data.color_graph;
  if (blueprint.a.size() != c.num_vertices || blueprint.dart_colors.size() != c.num_darts()) {
    out.push_back("blueprint does not match the color graph");
    return out;
  }
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const DartColorChoice& choice = blueprint.dart_colors[k];
    const std::int64_t a = blueprint.a[c.d0(k)];
    if (choice.group.order != data.r[k]) out.push_back("|Pi_" + std::to_string(k) + "| != r_k");
    if (choice.b != blueprint.dart_colors[c.bar(k)].b) out.push_back("|B_k| != |B_kbar| at " + std::to_string(k));
    if (a != data.r[k] * choice.b) out.push_back("a_i != r_k b_k at " + std::to_string(k));
    std::vector<bool> hit(static_cast<std::size_t>(std::max<std::int64_t>(a, 0)), false);
    bool bijective = static_cast<std::int64_t>(choice.phi.size()) == a;
    for (const auto alpha : choice.phi) {
      if (alpha >= hit.size() || hit[alpha]) {
        bijective = false;
        break;
      }
      hit[alpha] = true;
    }
    if (!bijective) out.push_back("phi_" + std::to_string(k) + " is not a bijection");
  }
  const ColoredGraph* parts[2] = {&g, &g2};
  for (int p = 0; p < 2; ++p) {
    const ColoredGraph& h = *parts[p];
    const auto& dclass = coloring.dart_class[p];
    if (blueprint.psi[p].size() != h.num_darts()) {
      out.push_back("psi of graph " + std::to_string(p) + " has the wrong size");
      continue;
    }
    const StarIndex stars(h);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      std::vector<std::pair<std::size_t, std::uint32_t>> seen;
      for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
        seen.emplace_back(dclass[*e], blueprint.psi[p][*e]);
      }
      std::sort(seen.begin(), seen.end());
      for (std::size_t j = 0; j < seen.size(); ++j) {
        const bool fresh_class = j == 0 || seen[j - 1].first != seen[j].first;
        const std::uint32_t expected = fresh_class ? 0 : seen[j - 1].second + 1;
        if (seen[j].second != expected || seen[j].second >= data.r[seen[j].first]) {
          out.push_back("psi at vertex " + std::to_string(v) + " of graph " + std::to_string(p) +
                        " is not a bijection onto Pi_" + std::to_string(seen[j].first));
          break;
        }
      }
    }
  }
  return out;
}

namespace {

// Members of each class in ascending id order, and each member's position.
struct ClassLists {
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> position;
};

ClassLists list_classes(const std::vector<std::size_t>& cls, std::size_t count) {
  ClassLists out;
  out.members.resize(count);
  out.position.resize(cls.size());
  for (std::uint32_t x = 0; x < cls.size(); ++x) {
    out.position[x] = static_cast<std::uint32_t>(out.members[cls[x]].size());
    out.members[cls[x]].push_back(x);
  }
  return out;
}

}  // namespace

CommonCover build_common_cover(const ColoredGraph& g, const ColoredGraph& g2,
                               const RefinedColoring& coloring, const CoverBlueprint& blueprint,
                               bool component_only) {
  const ColorGraph& c = coloring.color_graph;
  if (coloring.num_graphs() != 2) throw NoCommonCover("coloring must cover both graphs");
  const ClassLists verts[2] = {list_classes(coloring.vertex_class[0], c.num_vertices),
                               list_classes(coloring.vertex_class[1], c.num_vertices)};
  const ClassLists darts[2] = {list_classes(coloring.dart_class[0], c.num_darts()),
                               list_classes(coloring.dart_class[1], c.num_darts())};

  std::vector<std::int64_t> voff(c.num_vertices + 1, 0), doff(c.num_darts() + 1, 0);
  for (std::size_t i = 0; i < c.num_vertices; ++i) {
    const auto n = static_cast<std::int64_t>(verts[0].members[i].size());
    const auto n2 = static_cast<std::int64_t>(verts[1].members[i].size());
    if (n == 0 || n2 == 0) throw NoCommonCover("vertex class " + std::to_string(i) + " is one-sided");
    voff[i + 1] = voff[i] + checked_mul(checked_mul(n, n2), blueprint.a[i]);
  }
  for (std::size_t k = 0; k < c.num_darts(); ++k) {
    const auto m = static_cast<std::int64_t>(darts[0].members[k].size());
    const auto m2 = static_cast<std::int64_t>(darts[1].members[k].size());
    if (m == 0 || m2 == 0) throw NoCommonCover("dart class " + std::to_string(k) + " is one-sided");
    doff[k + 1] = doff[k] + checked_mul(checked_mul(m, m2), blueprint.dart_colors[k].b);
  }
  constexpr auto kMaxIds = static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max());
  if (voff.back() > kMaxIds || doff.back() > kMaxIds) {
    throw std::length_error("common cover too large for 32-bit ids");
  }

  auto vertex_id = [&](std::size_t i, Vertex v, Vertex v2, std::int64_t alpha) {
    const auto n2 = static_cast<std::int64_t>(verts[1].members[i].size());
    return static_cast<Vertex>(voff[i] + (verts[0].position[v] * n2 + verts[1].position[v2]) * blueprint.a[i] + alpha);
  };
  auto dart_id = [&](std::size_t k, Dart e, Dart e2, std::int64_t beta) {
    const auto m2 = static_cast<std::int64_t>(darts[1].members[k].size());
    return static_cast<Dart>(doff[k] + (darts[0].position[e] * m2 + darts[1].position[e2]) * blueprint.dart_colors[k].b + beta);
  };

  const bool vertex_colored = g.has_vertex_colors();
  const bool dart_colored = g.has_dart_colors();
  CommonCover out;
  out.full_vertices = voff.back();
  out.full_darts = doff.back();
  out.h.vertex_color.resize(static_cast<std::size_t>(voff.back()));
  out.to_g.vertex_map.resize(out.h.vertex_color.size());
  out.to_g2.vertex_map.resize(out.h.vertex_color.size());
  for (std::size_t i = 0; i < c.num_vertices; ++i) {
    for (const Vertex v : verts[0].members[i]) {
      for (const Vertex v2 : verts[1].members[i]) {
        for (std::int64_t alpha = 0; alpha < blueprint.a[i]; ++alpha) {
          const Vertex id = vertex_id(i, v, v2, alpha);
          if (vertex_colored) out.h.vertex_color[id] = g.vertex_color[v];
          out.to_g.vertex_map[id] = v;
          out.to_g2.vertex_map[id] = v2;
        }
      }
    }
  }

  out.h.darts.resize(static_cast<std::size_t>(doff.back()));
  out.to_g.dart_map.resize(out.h.darts.size());
  out.to_g2.dart_map.resize(out.h.darts.size());
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const DartColorChoice& choice = blueprint.dart_colors[k];
    const Dart kb = c.bar(k);
    const std::size_t i = c.d0(k);
    for (const Dart e : darts[0].members[k]) {
      for (const Dart e2 : darts[1].members[k]) {
        const std::uint32_t diff = choice.group.mul(blueprint.psi[0][e], choice.group.inv(blueprint.psi[1][e2]));
        for (std::int64_t beta = 0; beta < choice.b; ++beta) {
          const Dart id = dart_id(k, e, e2, beta);
          const std::int64_t alpha = choice.phi[diff * choice.b + beta];
          DartRecord& d = out.h.darts[id];
          d.tail = vertex_id(i, g.tail(e), g2.tail(e2), alpha);
          d.bar = dart_id(kb, g.bar(e), g2.bar(e2), beta);
          if (dart_colored) d.color = g.darts[e].color;
          out.to_g.dart_map[id] = e;
          out.to_g2.dart_map[id] = e2;
        }
      }
    }
  }

  if (component_only && out.h.num_vertices() > 0) {
    Component comp = connected_component(out.h, 0);
    out.to_g = compose(out.to_g, comp.inclusion);
    out.to_g2 = compose(out.to_g2, comp.inclusion);
    out.h = std::move(comp.graph);
  }
  return out;
}

CommonCover construct_common_cover(const ColoredGraph& g, const ColoredGraph& g2, SPolicy policy,
                                   std::optional<std::uint64_t> seed, bool component_only) {
  const CoverDecision decision = common_cover_exists(g, g2);
  if (!decision.exists) throw NoCommonCover("the graphs have no common covering");
  const CoverParameters params = cover_parameters(decision.data, policy);
  const CoverBlueprint blueprint = make_blueprint(g, g2, decision.coloring, decision.data, params, seed);
  return build_common_cover(g, g2, decision.coloring, blueprint, component_only);
}

std::string to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::kMapSize: return "map size";
    case DefectKind::kVertexOutOfRange: return "vertex out of range";
    case DefectKind::kDartOutOfRange: return "dart out of range";
    case DefectKind::kTailMismatch: return "tail mismatch";
    case DefectKind::kBarMismatch: return "bar mismatch";
    case DefectKind::kColorMismatch: return "color mismatch";
    case DefectKind::kStarNotBijective: return "star not bijective";
  }
  return "unknown";
}

CoveringReport verify_covering(const ColoredGraph& h, const ColoredGraph& g, const GraphMap& p) {
  CoveringReport report;
  auto& defects = report.defects;
  if (p.vertex_map.size() != h.num_vertices() || p.dart_map.size() != h.num_darts()) {
    defects.push_back({DefectKind::kMapSize, -1, "map sizes do not match the covering graph"});
    return report;
  }
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    if (p.vertex_map[w] >= g.num_vertices()) {
      defects.push_back({DefectKind::kVertexOutOfRange, w, "vertex " + std::to_string(w) + " maps outside the base"});
    }
  }
  for (Dart d = 0; d < h.num_darts(); ++d) {
    if (p.dart_map[d] >= g.num_darts()) {
      defects.push_back({DefectKind::kDartOutOfRange, d, "dart " + std::to_string(d) + " maps outside the base"});
    }
  }
  if (!defects.empty()) return report;

  const bool vertex_colors = h.has_vertex_colors() && g.has_vertex_colors();
  const bool dart_colors = h.has_dart_colors() && g.has_dart_colors();
  for (Dart d = 0; d < h.num_darts(); ++d) {
    const Dart e = p.dart_map[d];
    if (p.vertex_map[h.tail(d)] != g.tail(e)) {
      defects.push_back({DefectKind::kTailMismatch, d,
                         "dart " + std::to_string(d) + ": p(tail) != tail(p)"});
    }
    if (p.dart_map[h.bar(d)] != g.bar(e)) {
      defects.push_back({DefectKind::kBarMismatch, d, "dart " + std::to_string(d) + ": p(bar) != bar(p)"});
    }
    if (dart_colors && h.darts[d].color != g.darts[e].color) {
      defects.push_back({DefectKind::kColorMismatch, d, "dart " + std::to_string(d) + " changes color"});
    }
  }
  const StarIndex hstars(h), gstars(g);
  std::vector<std::uint32_t> stamp(g.num_darts(), 0);
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    const Vertex v = p.vertex_map[w];
    if (vertex_colors && h.vertex_color[w] != g.vertex_color[v]) {
      defects.push_back({DefectKind::kColorMismatch, w, "vertex " + std::to_string(w) + " changes color"});
    }
    bool bijective = hstars.degree(w) == gstars.degree(v);
    for (const Dart* d = hstars.begin(w); bijective && d != hstars.end(w); ++d) {
      const Dart e = p.dart_map[*d];
      if (stamp[e] == w + 1 || g.tail(e) != v) bijective = false;
      stamp[e] = w + 1;
    }
    if (!bijective) {
      defects.push_back({DefectKind::kStarNotBijective, w,
                         "star of vertex " + std::to_string(w) + " is not mapped bijectively onto star of " +
                             std::to_string(v)});
    }
  }
  return report;
}

std::int64_t covering_degree(const ColoredGraph& h, const ColoredGraph& g, const GraphMap& p) {
  if (g.num_vertices() == 0) throw std::domain_error("empty base graph");
  if (p.vertex_map.size() != h.num_vertices()) throw std::invalid_argument("map does not cover h");
  std::vector<std::int64_t> fiber(g.num_vertices(), 0);
  for (const Vertex v : p.vertex_map) ++fiber.at(v);
  if (std::adjacent_find(fiber.begin(), fiber.end(), std::not_equal_to<>()) != fiber.end()) {
    throw std::domain_error("fibers of the map have different sizes");
  }
  return fiber.front();
}

}  // namespace cover
