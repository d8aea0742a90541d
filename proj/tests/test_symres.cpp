#include <doctest.h>

#include <array>

#include "cover/symres.hpp"
#include "fixtures.hpp"
#include "groups.hpp"

using namespace cover;

namespace {

// Complete bipartite graph colored over the single-edge color graph, with
// each star charted in dart order.
SRGraph bipartite_sr(std::uint32_t left, std::uint32_t right) {
  SRGraph g;
  g.graph = fixtures::complete_bipartite(left, right);
  for (Vertex v = 0; v < left + right; ++v) g.graph.vertex_color[v] = v < left ? 0 : 1;
  for (Dart e = 0; e < g.graph.num_darts(); ++e) g.graph.darts[e].color = e % 2;
  g.charts.resize(left + right);
  for (Vertex v = 0; v < left + right; ++v) {
    Point x = 0;
    for (Dart e : star(g.graph, v)) g.charts[v].emplace_back(e, x++);
  }
  return g;
}

SymRestrictedData edge_data(const PermGroup& left, const PermGroup& right) {
  SymRestrictedData d;
  d.color_graph = fixtures::single_edge();
  d.groups = {fixtures::transitive(left, 0), fixtures::transitive(right, 1)};
  return d;
}

void twist(SRGraph& g, Vertex v, const Perm& p) {
  for (auto& [e, x] : g.charts[v]) x = p[x];
}

bool equivariant(const SymGroup& sg, const Perm& mu, const Perm& gamma) {
  for (const Perm& delta : sg.group.generators()) {
    const Perm conj = compose(gamma, compose(delta, inverse(gamma)));
    if (compose(mu, delta) != compose(conj, mu)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_symdata") {
  CHECK(validate_symdata(fixtures::dodeca_cube()).empty());
  CHECK(validate_symdata(fixtures::z4_loop()).empty());
  CHECK(validate_symdata(fixtures::path_data()).empty());

  SymRestrictedData two_orbits = edge_data(PermGroup::closure(2, {}), groups::symmetric(3));
  const auto v1 = validate_symdata(two_orbits);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1[0].message.find("orbit/color mismatch") != std::string::npos);

  SymRestrictedData wrong = fixtures::dodeca_cube();
  wrong.groups[0].orbit_labels[0] = 1;
  const auto v2 = validate_symdata(wrong);
  REQUIRE_FALSE(v2.empty());
  CHECK(v2[0].message.find("violates d0") != std::string::npos);
}

TEST_CASE("validate_srs_graph") {
  const SymRestrictedData dc = fixtures::dodeca_cube();
  // Each d-vertex has 20 darts, each c-vertex 8.
  CHECK(validate_srs_graph(bipartite_sr(8, 20), dc).empty());

  SymRestrictedData s3 = edge_data(groups::symmetric(3), groups::symmetric(3));
  SRGraph g = bipartite_sr(3, 3);
  CHECK(validate_srs_graph(g, s3).empty());

  SRGraph off = g;
  off.charts[0][0].second = 7;
  CHECK_FALSE(validate_srs_graph(off, s3).empty());

  const SRGraph wrong_degree = bipartite_sr(3, 2);
  CHECK_FALSE(validate_srs_graph(wrong_degree, s3).empty());

  SymRestrictedData two = s3;
  two.groups[0] = SymGroup{PermGroup::closure(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}), 4, {}};
  two.groups[0].orbit_labels[0] = 0;
  two.groups[0].orbit_labels[2] = 0;
  CHECK_FALSE(validate_symdata(two).empty());
}

TEST_CASE("check_weak_equivariance") {
  const SymRestrictedData s3 = edge_data(groups::symmetric(3), groups::symmetric(3));
  const auto id = check_weak_equivariance(s3, 0, identity_perm(3));
  REQUIRE(id);
  CHECK(*id == identity_perm(3));

  const Perm swap01 = {1, 0, 2};
  const auto g = check_weak_equivariance(s3, 0, swap01);
  REQUIRE(g);
  CHECK(equivariant(s3.groups[0], swap01, *g));

  const SymRestrictedData z4 = edge_data(groups::cyclic(4), groups::cyclic(4));
  CHECK_FALSE(check_weak_equivariance(z4, 0, {1, 0, 2, 3}));
}

TEST_CASE("verify_sr_morphism") {
  const SymRestrictedData s3 = edge_data(groups::symmetric(3), groups::symmetric(3));
  const SRGraph g = bipartite_sr(3, 3);
  const GraphMap id = identity_map(g.graph);
  const auto plain = verify_sr_morphism(id, g, g, s3);
  CHECK(plain.ok());
  CHECK(plain.covering_ok);

  SRGraph twisted = g;
  const auto& elems = s3.groups[0].group.elements();
  for (Vertex v = 0; v < 6; ++v) twist(twisted, v, elems[v % elems.size()]);
  const auto report = verify_sr_morphism(id, g, twisted, s3);
  CHECK(report.ok());
  CHECK(report.covering_ok);
  for (const auto& gamma : report.gamma) CHECK(gamma.has_value());

  const SymRestrictedData z4 = edge_data(groups::cyclic(4), groups::cyclic(4));
  const SRGraph k44 = bipartite_sr(4, 4);
  SRGraph bad = k44;
  twist(bad, 0, {1, 0, 2, 3});
  const auto r2 = verify_sr_morphism(identity_map(k44.graph), k44, bad, z4);
  REQUIRE(r2.defects.size() == 1);
  CHECK(r2.defects[0].vertex == 0);
  CHECK(r2.covering_ok);
}

TEST_CASE("edge stabilizers") {
  const auto dc = edge_stabilizers(fixtures::dodeca_cube());
  REQUIRE(dc.edges.size() == 1);
  CHECK(dc.edges[0].order == 6);
  CHECK(dc.edges[0].bar_order == 6);
  CHECK(dc.all_balanced());
  CHECK_FALSE(dc.stabilizers[0].group.is_abelian());
  CHECK(dc.stabilizers[0].basepoint == 0);

  const auto ic = edge_stabilizers(fixtures::icosa_cube());
  CHECK(ic.edges[0].order == 10);
  CHECK(ic.edges[0].bar_order == 6);
  CHECK_FALSE(ic.all_balanced());

  CHECK(edge_stabilizers(edge_data(groups::cyclic(3), groups::cyclic(5))).all_balanced());

  for (const auto& d : {fixtures::dodeca_cube(), fixtures::icosa_cube(), fixtures::path_data(), fixtures::z4_loop()}) {
    const auto rep = edge_stabilizers(d);
    for (Dart k = 0; k < d.color_graph.num_darts(); ++k) {
      const SymGroup& sg = d.groups[d.color_graph.d0(k)];
      const Point x = rep.stabilizers[k].basepoint;
      CHECK(sg.group.order() == orbit_of(sg.group, x).size() * rep.stabilizers[k].group.order());
    }
  }
}

TEST_CASE("darts towards a vertex of a tree") {
  const auto towards = darts_towards(fixtures::color_path(3));
  CHECK(towards[0] == std::vector<Dart>{1, 3});
  CHECK(towards[1] == std::vector<Dart>{0, 3});
  CHECK(towards[2] == std::vector<Dart>{0, 2});
}

TEST_CASE("reduce_to_balanced") {
  const SymRestrictedData out = reduce_to_balanced(fixtures::dodeca_cube());
  CHECK(out.groups[0].group.order() == 720);
  CHECK(out.groups[1].group.order() == 288);
  CHECK(out.groups[0].star_size == 20);
  CHECK(validate_symdata(out).empty());
  const auto rep = edge_stabilizers(out);
  CHECK(rep.edges[0].order == 36);
  CHECK(rep.all_balanced());
  const std::array<PermGroup, 2> s3s = {groups::symmetric(3), groups::symmetric(3)};
  CHECK(are_isomorphic(rep.stabilizers[0].group, direct_product(s3s)));

  // Free actions: the products are by trivial groups.
  SymRestrictedData free;
  free.color_graph = fixtures::color_path(3);
  free.groups = {fixtures::transitive(groups::cyclic(3), 0), SymGroup{PermGroup::closure(6, {{1, 2, 0, 4, 5, 3}}), 6, {}},
                 fixtures::transitive(groups::cyclic(3), 3)};
  free.groups[1].orbit_labels = {{0, 1}, {3, 2}};
  REQUIRE(validate_symdata(free).empty());
  const SymRestrictedData same = reduce_to_balanced(free);
  for (Vertex i = 0; i < 3; ++i) CHECK(same.groups[i].group.order() == free.groups[i].group.order());

  const SymRestrictedData path = fixtures::path_data();
  CHECK_FALSE(edge_stabilizers(path).all_balanced());
  CHECK(edge_stabilizers(reduce_to_balanced(path)).all_balanced());

  CHECK_THROWS_AS(reduce_to_balanced(fixtures::z4_loop()), std::invalid_argument);
}

TEST_CASE("cycle condition") {
  const auto loop = check_cycle_condition(fixtures::z4_loop(), 4);
  REQUIRE_FALSE(loop.ok());
  CHECK(loop.first_failure->path.size() == 1);

  const SymRestrictedData dc = fixtures::dodeca_cube();
  CHECK(check_cycle_condition(dc, default_cycle_length(dc.color_graph)).ok());
  CHECK(check_cycle_condition(fixtures::path_data(), 8).ok());
  CHECK(check_cycle_condition(fixtures::icosa_cube(), 6).ok());

  // A balanced loop: both orbits carry S3 with stabilizer Z2.
  SymRestrictedData bal;
  bal.color_graph = fixtures::single_loop();
  bal.groups = {SymGroup{PermGroup::closure(6, {{1, 2, 0, 3, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 4, 5, 3},
                                                {0, 1, 2, 4, 3, 5}}),
                         6,
                         {{0, 0}, {3, 1}}}};
  REQUIRE(validate_symdata(bal).empty());
  const auto r = check_cycle_condition(bal, default_cycle_length(bal.color_graph));
  CHECK(r.ok());
  CHECK(r.max_len == 2);
  CHECK_FALSE(r.checked.empty());
}
