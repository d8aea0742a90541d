#include "cover/symres.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace cover {

std::optional<Point> SymGroup::basepoint(Dart k) const {
  for (const auto& [point, label] : orbit_labels) {
    if (label == k) return point;
  }
  return std::nullopt;
}

std::vector<SymViolation> validate_symdata(const SymRestrictedData& d) {
  std::vector<SymViolation> out;
  const ColorGraph& c = d.color_graph;
  for (const Violation& v : validate_color_graph(c)) out.push_back({"color graph: " + v.message});
  if (!out.empty()) return out;
  if (d.groups.size() != c.num_vertices) {
    out.push_back({"expected " + std::to_string(c.num_vertices) + " groups, found " +
                   std::to_string(d.groups.size())});
    return out;
  }
  for (Vertex i = 0; i < c.num_vertices; ++i) {
    const SymGroup& sg = d.groups[i];
    const std::string where = "vertex color " + std::to_string(i) + ": ";
    if (sg.star_size > sg.group.degree()) {
      out.push_back({where + "star size exceeds the group degree"});
      continue;
    }
    std::set<Dart> expected;
    for (Dart k = 0; k < c.num_darts(); ++k) {
      if (c.d0(k) == i) expected.insert(k);
    }
    std::set<Dart> seen;
    std::size_t star_orbits = 0;
    for (const Orbit& o : orbits(sg.group)) {
      const Point lo = o.points.front();
      if (lo >= sg.star_size) {
        if (sg.orbit_labels.count(lo) != 0) out.push_back({where + "label on an auxiliary orbit at " + std::to_string(lo)});
        continue;
      }
      ++star_orbits;
      if (o.points.back() >= sg.star_size) {
        out.push_back({where + "orbit of " + std::to_string(lo) + " leaves the star"});
      }
      auto it = sg.orbit_labels.find(lo);
      if (it == sg.orbit_labels.end()) {
        out.push_back({where + "orbit/color mismatch: orbit of " + std::to_string(lo) + " is unlabeled"});
        continue;
      }
      const Dart k = it->second;
      if (k >= c.num_darts() || c.d0(k) != i) {
        out.push_back({where + "label " + std::to_string(k) + " violates d0"});
        continue;
      }
      if (!seen.insert(k).second) out.push_back({where + "label " + std::to_string(k) + " used twice"});
      const std::size_t stab = stabilizer(sg.group, lo).order();
      if (stab * o.points.size() != sg.group.order()) {
        out.push_back({where + "orbit-stabilizer count fails at " + std::to_string(lo)});
      }
    }
    for (const auto& [point, k] : sg.orbit_labels) {
      if (point >= sg.group.degree() || orbit_of(sg.group, point).front() != point) {
        out.push_back({where + "label on " + std::to_string(point) + ", which is not an orbit minimum"});
      }
    }
    if (star_orbits != expected.size() || seen.size() != expected.size()) {
      out.push_back({where + "orbit/color mismatch: " + std::to_string(star_orbits) + " orbits for " +
                     std::to_string(expected.size()) + " dart colors"});
    }
  }
  return out;
}

Point SRGraph::chart_point(Vertex v, Dart e) const {
  for (const auto& [dart, point] : charts.at(v)) {
    if (dart == e) return point;
  }
  throw std::out_of_range("dart " + std::to_string(e) + " missing from the chart of " + std::to_string(v));
}

std::vector<SymViolation> validate_srs_graph(const SRGraph& g, const SymRestrictedData& d) {
  std::vector<SymViolation> out;
  const ColoredGraph& h = g.graph;
  const ColorGraph& c = d.color_graph;
  for (const Violation& v : validate_graph(h, c)) out.push_back({v.message});
  if (!out.empty()) return out;
  if (h.num_vertices() > 0 && (!h.has_vertex_colors() || (h.num_darts() > 0 && !h.has_dart_colors()))) {
    out.push_back({"graph must be colored over the color graph"});
    return out;
  }
  if (g.charts.size() != h.num_vertices()) {
    out.push_back({"expected one chart per vertex"});
    return out;
  }
  const StarIndex stars(h);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const auto i = static_cast<Vertex>(*h.vertex_color[v]);
    const SymGroup& sg = d.groups.at(i);
    const std::string where = "vertex " + std::to_string(v) + ": ";
    if (stars.degree(v) != sg.star_size) {
      out.push_back({where + "degree " + std::to_string(stars.degree(v)) + " but |X_" + std::to_string(i) +
                     "| = " + std::to_string(sg.star_size)});
    }
    std::map<Dart, Point> chart;
    std::set<Point> points;
    for (const auto& [e, x] : g.charts[v]) {
      if (e >= h.num_darts() || h.tail(e) != v) {
        out.push_back({where + "chart lists dart " + std::to_string(e) + " outside the star"});
        continue;
      }
      if (!chart.emplace(e, x).second) out.push_back({where + "dart " + std::to_string(e) + " charted twice"});
      if (x >= sg.star_size) {
        out.push_back({where + "point " + std::to_string(x) + " is not a star point"});
        continue;
      }
      if (!points.insert(x).second) out.push_back({where + "point " + std::to_string(x) + " charted twice"});
      const auto k = static_cast<Dart>(*h.darts[e].color);
      const Point lo = orbit_of(sg.group, x).front();
      auto it = sg.orbit_labels.find(lo);
      if (it == sg.orbit_labels.end() || it->second != k) {
        out.push_back({where + "dart " + std::to_string(e) + " of color " + std::to_string(k) +
                       " charted into the wrong orbit"});
      }
    }
    for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) {
      if (chart.count(*e) == 0) out.push_back({where + "dart " + std::to_string(*e) + " has no chart point"});
    }
    std::map<Dart, std::size_t> per_color;
    for (const Dart* e = stars.begin(v); e != stars.end(v); ++e) ++per_color[static_cast<Dart>(*h.darts[*e].color)];
    for (const auto& [point, k] : sg.orbit_labels) {
      const std::size_t orbit_size = orbit_of(sg.group, point).size();
      if (per_color[k] != orbit_size) {
        out.push_back({where + std::to_string(per_color[k]) + " darts of color " + std::to_string(k) +
                       " but the orbit has " + std::to_string(orbit_size) + " points"});
      }
    }
  }
  return out;
}

std::optional<Perm> check_weak_equivariance(const SymRestrictedData& d, Vertex i, const Perm& mu) {
  const SymGroup& sg = d.groups.at(i);
  if (mu.size() != sg.star_size || !is_permutation(mu)) {
    throw std::invalid_argument("mu must be a bijection of the star points");
  }
  const auto& gens = sg.group.generators();
  for (const Perm& gamma : sg.group.elements()) {
    const Perm gamma_inv = inverse(gamma);
    bool works = true;
    for (const Perm& delta : gens) {
      const Perm conj = compose(gamma, compose(delta, gamma_inv));
      for (Point x = 0; x < sg.star_size && works; ++x) {
        works = mu[delta[x]] == conj[mu[x]];
      }
      if (!works) break;
    }
    if (works) return gamma;
  }
  return std::nullopt;
}

SrMorphismReport verify_sr_morphism(const GraphMap& phi, const SRGraph& g, const SRGraph& g2,
                                    const SymRestrictedData& d) {
  SrMorphismReport report;
  const ColoredGraph& a = g.graph;
  const ColoredGraph& b = g2.graph;
  report.covering_ok = verify_covering(a, b, phi).ok();
  report.gamma.assign(a.num_vertices(), std::nullopt);
  if (phi.vertex_map.size() != a.num_vertices() || phi.dart_map.size() != a.num_darts()) {
    report.defects.push_back({-1, "map sizes do not match the source graph"});
    return report;
  }
  for (Dart e = 0; e < a.num_darts(); ++e) {
    const Dart f = phi.dart_map[e];
    if (f >= b.num_darts() || phi.vertex_map[a.tail(e)] >= b.num_vertices() ||
        phi.vertex_map[a.tail(e)] != b.tail(f) || phi.dart_map[a.bar(e)] != b.bar(f) ||
        a.darts[e].color != b.darts[f].color) {
      report.defects.push_back({a.tail(e), "dart " + std::to_string(e) + " breaks the colored homomorphism"});
      return report;
    }
  }
  const StarIndex stars(a);
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    const Vertex w = phi.vertex_map[v];
    if (a.vertex_color[v] != b.vertex_color[w]) {
      report.defects.push_back({v, "vertex " + std::to_string(v) + " changes color"});
      continue;
    }
    const auto i = static_cast<Vertex>(*a.vertex_color[v]);
    const std::size_t size = d.groups.at(i).star_size;
    Perm mu(size, static_cast<Point>(size));
    bool bijective = stars.degree(v) == size;
    for (const Dart* e = stars.begin(v); bijective && e != stars.end(v); ++e) {
      const Point x = g.chart_point(v, *e);
      const Point y = g2.chart_point(w, phi.dart_map[*e]);
      if (mu[x] != size) bijective = false;
      mu[x] = y;
    }
    if (!bijective || !is_permutation(mu)) {
      report.defects.push_back({v, "star of vertex " + std::to_string(v) + " is not mapped bijectively"});
      continue;
    }
    report.gamma[v] = check_weak_equivariance(d, i, mu);
    if (!report.gamma[v]) {
      report.defects.push_back({v, "star map at vertex " + std::to_string(v) + " is not weakly equivariant"});
    }
  }
  return report;
}

bool StabilizerReport::all_balanced() const {
  return std::all_of(edges.begin(), edges.end(), [](const EdgeBalance& e) { return e.balanced; });
}

namespace {

std::vector<EdgeStabilizer> stabilizer_table(const SymRestrictedData& d) {
  std::vector<EdgeStabilizer> out;
  const ColorGraph& c = d.color_graph;
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const SymGroup& sg = d.groups.at(c.d0(k));
    const auto base = sg.basepoint(k);
    if (!base) throw std::invalid_argument("no orbit labeled " + std::to_string(k));
    out.push_back({k, *base, stabilizer(sg.group, *base)});
  }
  return out;
}

}  // namespace

StabilizerReport edge_stabilizers(const SymRestrictedData& d) {
  StabilizerReport report;
  report.stabilizers = stabilizer_table(d);
  const ColorGraph& c = d.color_graph;
  for (Dart k = 0; k < c.num_darts(); ++k) {
    const Dart kb = c.bar(k);
    if (kb < k) continue;
    const PermGroup& gk = report.stabilizers[k].group;
    const PermGroup& gkb = report.stabilizers[kb].group;
    report.edges.push_back({k, kb, gk.order(), gkb.order(), k == kb || are_isomorphic(gk, gkb)});
  }
  return report;
}

std::vector<std::vector<Dart>> darts_towards(const ColorGraph& tree) {
  std::vector<std::vector<Dart>> out(tree.num_vertices);
  for (Vertex i = 0; i < tree.num_vertices; ++i) {
    std::vector<bool> seen(tree.num_vertices, false);
    std::deque<Vertex> queue{i};
    seen[i] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Dart k = 0; k < tree.num_darts(); ++k) {
        if (tree.d0(k) != v || seen[tree.d1(k)]) continue;
        seen[tree.d1(k)] = true;
        out[i].push_back(tree.bar(k));
        queue.push_back(tree.d1(k));
      }
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

SymRestrictedData reduce_to_balanced(const SymRestrictedData& d, std::size_t cap) {
  const ColorGraph& c = d.color_graph;
  if (!is_tree(c)) throw std::invalid_argument("the color graph is not a tree");
  const std::vector<EdgeStabilizer> stabs = stabilizer_table(d);
  const auto towards = darts_towards(c);

  SymRestrictedData out;
  out.color_graph = c;
  for (Vertex i = 0; i < c.num_vertices; ++i) {
    std::vector<PermGroup> factors{d.groups[i].group};
    for (const Dart k : towards[i]) factors.push_back(stabs[k].group);
    SymGroup sg;
    sg.group = direct_product(factors, cap);
    sg.star_size = d.groups[i].star_size;
    sg.orbit_labels = d.groups[i].orbit_labels;
    out.groups.push_back(std::move(sg));
  }
  if (!edge_stabilizers(out).all_balanced()) {
    throw std::logic_error("reduced data is not balanced");
  }
  return out;
}

std::size_t default_cycle_length(const ColorGraph& c) {
  std::size_t fixed = 0;
  for (Dart k = 0; k < c.num_darts(); ++k) fixed += c.bar(k) == k ? 1 : 0;
  return c.num_darts() + fixed;  // 2 |E(C)|
}

namespace {

bool is_min_rotation(const std::vector<Dart>& path) {
  const std::size_t n = path.size();
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const Dart x = path[(s + j) % n];
      if (x < path[j]) return false;
      if (x > path[j]) break;
    }
  }
  return true;
}

}  // namespace

CycleReport check_cycle_condition(const SymRestrictedData& d, std::size_t max_len, std::size_t cap) {
  CycleReport report;
  report.max_len = max_len;
  const ColorGraph& c = d.color_graph;
  const std::vector<EdgeStabilizer> stabs = stabilizer_table(d);

  // Factors common to both sides cancel (Krull-Schmidt for finite groups),
  // so only the unmatched remainder is materialized.
  std::vector<int> iso_memo(c.num_darts() * c.num_darts(), -1);
  auto test_path = [&](const std::vector<Dart>& path) {
    std::vector<Dart> forward(path), backward;
    std::size_t order = 1;
    for (const Dart k : path) {
      backward.push_back(c.bar(k));
      const std::size_t o = stabs[k].group.order();
      order = order > std::numeric_limits<std::size_t>::max() / o ? std::numeric_limits<std::size_t>::max() : order * o;
    }
    std::vector<PermGroup> lhs_factors, rhs_factors;
    auto same = [&](Dart a, Dart b) {
      if (a == b) return true;
      auto& memo = iso_memo[a * c.num_darts() + b];
      if (memo < 0) memo = are_isomorphic(stabs[a].group, stabs[b].group) ? 1 : 0;
      return memo == 1;
    };
    std::vector<bool> used(backward.size(), false);
    for (const Dart k : forward) {
      bool matched = false;
      for (std::size_t j = 0; j < backward.size() && !matched; ++j) {
        if (used[j]) continue;
        const Dart kb = backward[j];
        if (same(k, kb)) matched = used[j] = true;
      }
      if (!matched) lhs_factors.push_back(stabs[k].group);
    }
    for (std::size_t j = 0; j < backward.size(); ++j) {
      if (!used[j]) rhs_factors.push_back(stabs[backward[j]].group);
    }
    bool iso = lhs_factors.empty() && rhs_factors.empty();
    if (!iso) iso = are_isomorphic(direct_product(lhs_factors, cap), direct_product(rhs_factors, cap));
    PathCheck check{path, order, iso};
    report.checked.push_back(check);
    if (!check.isomorphic) report.first_failure = check;
  };

  // Paths start at their minimal dart; only the minimal rotation is kept.
  std::vector<Dart> path;
  auto extend = [&](auto&& self) -> void {
    if (report.first_failure) return;
    const Dart first = path.front();
    const Dart last = path.back();
    if (c.d1(last) == c.d0(first) && is_min_rotation(path)) {
      test_path(path);
      if (report.first_failure) return;
    }
    if (path.size() == max_len) return;
    for (Dart k = first; k < c.num_darts(); ++k) {
      if (c.d0(k) != c.d1(last)) continue;
      path.push_back(k);
      self(self);
      path.pop_back();
      if (report.first_failure) return;
    }
  };
  for (Dart k = 0; k < c.num_darts() && max_len > 0; ++k) {
    path.assign(1, k);
    extend(extend);
    if (report.first_failure) break;
  }
  return report;
}

}  // namespace cover
