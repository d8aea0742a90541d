#pragma once

// Symmetry-restricted graphs: a graph of colors C with a permutation group
// Delta_i for each vertex color i whose orbits on the star are labeled by
// the dart colors leaving i.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cover/graph.hpp"
#include "cover/leighton.hpp"
#include "cover/permgroup.hpp"

namespace cover {

/// Delta_i acting on X_i. Points 0..star_size-1 model the star of an
/// i-vertex; any further points carry extra direct factors and have
/// unlabeled orbits.
struct SymGroup {
  PermGroup group;
  std::size_t star_size = 0;
  std::map<Point, Dart> orbit_labels;  // orbit min point -> dart color

  /// Basepoint of the orbit labeled k: its minimal point.
  std::optional<Point> basepoint(Dart k) const;
};

struct SymRestrictedData {
  ColorGraph color_graph;
  std::vector<SymGroup> groups;  // per vertex color
};

struct SymViolation {
  std::string message;
};

std::vector<SymViolation> validate_symdata(const SymRestrictedData& d);

/// A graph colored over the color graph, with a chart per vertex: chart[v]
/// lists (dart, point) pairs identifying star(v) with the star points of
/// X_{color(v)}.
struct SRGraph {
  ColoredGraph graph;
  std::vector<std::vector<std::pair<Dart, Point>>> charts;

  /// lambda_v(e), assuming a valid chart.
  Point chart_point(Vertex v, Dart e) const;
};

std::vector<SymViolation> validate_srs_graph(const SRGraph& g, const SymRestrictedData& d);

/// Some gamma in Delta_i with mu . delta = (gamma delta gamma^-1) . mu on the
/// star points for every generator delta, or nullopt. Elements are searched
/// in closure order, so the identity is found first when it works.
std::optional<Perm> check_weak_equivariance(const SymRestrictedData& d, Vertex i, const Perm& mu);

struct SrMorphismDefect {
  std::int64_t vertex;
  std::string message;
};

struct SrMorphismReport {
  std::vector<SrMorphismDefect> defects;
  std::vector<std::optional<Perm>> gamma;  // per vertex of the source
  bool covering_ok = false;                // verify_covering on the same map

  bool ok() const { return defects.empty(); }
};

/// phi must be a colored homomorphism whose restriction to each star,
/// read through the charts as mu_v = lambda_{phi(v)} . phi . lambda_v^-1,
/// is weakly equivariant.
SrMorphismReport verify_sr_morphism(const GraphMap& phi, const SRGraph& g, const SRGraph& g2,
                                    const SymRestrictedData& d);

struct EdgeStabilizer {
  Dart k = 0;
  Point basepoint = 0;
  PermGroup group;
};

struct EdgeBalance {
  Dart k = 0;
  Dart k_bar = 0;
  std::size_t order = 0;
  std::size_t bar_order = 0;
  bool balanced = false;
};

struct StabilizerReport {
  std::vector<EdgeStabilizer> stabilizers;  // indexed by dart color
  std::vector<EdgeBalance> edges;           // one per geometric edge, k <= k_bar

  bool all_balanced() const;
};

/// Delta_k at the minimal point of the k-labeled orbit, and whether
/// Delta_k is isomorphic to Delta_kbar for every geometric edge of C.
StabilizerReport edge_stabilizers(const SymRestrictedData& d);

/// For each vertex color i of a tree C, the darts of C pointing towards i:
/// one per geometric edge, oriented so that its head side contains i.
std::vector<std::vector<Dart>> darts_towards(const ColorGraph& tree);

/// Replaces each Delta_i by Delta_i x prod_{k in K_i} Delta_k acting on the
/// star through the first factor, then checks that the result is balanced.
/// Throws std::invalid_argument when C is not a tree and std::logic_error if
/// the output fails the balance check.
SymRestrictedData reduce_to_balanced(const SymRestrictedData& d, std::size_t cap = kDefaultGroupCap);

struct PathCheck {
  std::vector<Dart> path;
  std::size_t order = 0;
  bool isomorphic = false;
};

struct CycleReport {
  std::size_t max_len = 0;
  std::vector<PathCheck> checked;
  std::optional<PathCheck> first_failure;

  bool ok() const { return !first_failure.has_value(); }
};

std::size_t default_cycle_length(const ColorGraph& c);

/// Enumerates closed directed dart paths of C up to max_len, one per cyclic
/// rotation class, and compares prod Delta_{k_j} with prod Delta_{kbar_j}.
/// Stops at the first failure.
CycleReport check_cycle_condition(const SymRestrictedData& d, std::size_t max_len,
                                  std::size_t cap = kDefaultGroupCap);

}  // namespace cover
