#pragma once

// Explicit common finite cover of two graphs with the same universal cover,
// plus a covering-map verifier.
//
// H has vertices (i, v, v', alpha) with v, v' of refined class i and
// alpha < a_i, and darts (k, e, e', beta) with e, e' of class k and
// beta < b_k. The tail of (k, e, e', beta) is
//   (d0 k, tail e, tail e', phi_k(psi(e) * psi(e')^-1, beta))
// and its bar is (bar k, bar e, bar e', beta).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cover/graph.hpp"
#include "cover/refinement.hpp"

namespace cover {

enum class SPolicy { kFirstGraphLcm, kBothGraphsLcm };

struct CoverParameters {
  std::int64_t s = 0;
  std::vector<std::int64_t> a;  // per vertex class
  std::vector<std::int64_t> b;  // per dart class
};

/// s = lcm of the m_k (first graph, or both), a_i = s / n_i, b_k = s / m_k.
/// Re-verifies b_k = a_i / r_k = a_j / r_kbar = b_kbar and s = n_i a_i for
/// every graph; throws std::domain_error on a non-integral or inconsistent
/// value and std::overflow_error if s does not fit in 63 bits.
CoverParameters cover_parameters(const ColorGraphData& data,
                                 SPolicy policy = SPolicy::kFirstGraphLcm);

/// A finite group given by its Cayley table; element 0 is the identity.
struct FiniteGroup {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> product;  // product[x * order + y] = x * y
  std::vector<std::uint32_t> inverse;

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return product[x * order + y]; }
  std::uint32_t inv(std::uint32_t x) const { return inverse[x]; }
};

FiniteGroup cyclic_group(std::uint32_t order);

/// Builds a FiniteGroup from a table, checking the group axioms.
/// Throws std::invalid_argument if the table is not a group with identity 0.
FiniteGroup group_from_table(std::uint32_t order, std::vector<std::uint32_t> product);

struct DartColorChoice {
  FiniteGroup group;                // Pi_k, of order r_k
  std::int64_t b = 0;               // |B_k|
  std::vector<std::uint32_t> phi;   // phi[p * b + beta] in A_{d0 k}
};

struct CoverBlueprint {
  std::vector<std::int64_t> a;               // |A_i|
  std::vector<DartColorChoice> dart_colors;  // per dart class k
  std::vector<std::uint32_t> psi[2];         // [graph][dart] -> element of Pi_k
};

/// Pi_k cyclic with phi_k(p, beta) = p + r_k beta; psi_vk is the rank of e
/// among the k-darts at v in star order, shuffled per (graph, v, k) when a
/// seed is given.
CoverBlueprint make_blueprint(const ColoredGraph& g, const ColoredGraph& g2,
                              const RefinedColoring& coloring, const ColorGraphData& data,
                              const CoverParameters& params,
                              std::optional<std::uint64_t> seed = std::nullopt);

/// Swaps in another group of order r_k and bijection phi_k for dart class k.
/// Elements of psi keep their indices. Throws std::invalid_argument on a
/// size mismatch or if phi is not a bijection onto A_{d0 k}.
void replace_group(CoverBlueprint& blueprint, const ColorGraph& color_graph, Dart k,
                   FiniteGroup group, std::vector<std::uint32_t> phi);

/// Empty iff every phi_k and psi_vk is a bijection of the right sizes.
std::vector<std::string> validate_blueprint(const CoverBlueprint& blueprint, const ColoredGraph& g,
                                            const ColoredGraph& g2, const RefinedColoring& coloring,
                                            const ColorGraphData& data);

struct CommonCover {
  ColoredGraph h;
  GraphMap to_g;
  GraphMap to_g2;
  std::int64_t full_vertices = 0;  // before component extraction
  std::int64_t full_darts = 0;
};

class NoCommonCover : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds H with ids in lexicographic tuple order. With `component_only`,
/// H is cut down to the component of vertex 0 and the maps restricted.
/// H carries the input colors when the inputs are colored.
CommonCover build_common_cover(const ColoredGraph& g, const ColoredGraph& g2,
                               const RefinedColoring& coloring, const CoverBlueprint& blueprint,
                               bool component_only = false);

/// Convenience: decide, pick parameters and a blueprint, and build.
/// Throws NoCommonCover when the graphs have no common cover.
CommonCover construct_common_cover(const ColoredGraph& g, const ColoredGraph& g2,
                                   SPolicy policy = SPolicy::kFirstGraphLcm,
                                   std::optional<std::uint64_t> seed = std::nullopt,
                                   bool component_only = false);

enum class DefectKind {
  kMapSize,
  kVertexOutOfRange,
  kDartOutOfRange,
  kTailMismatch,
  kBarMismatch,
  kColorMismatch,
  kStarNotBijective,
};

struct Defect {
  DefectKind kind;
  std::int64_t id;  // offending vertex or dart of h
  std::string message;
};

struct CoveringReport {
  std::vector<Defect> defects;
  bool ok() const { return defects.empty(); }
};

std::string to_string(DefectKind kind);

/// Checks that p: h -> g is a graph map preserving colors (where both are
/// colored) that restricts to a bijection star(w) -> star(p(w)) for every
/// vertex w. Defects are listed in vertex/dart order.
CoveringReport verify_covering(const ColoredGraph& h, const ColoredGraph& g, const GraphMap& p);

/// Common fiber size of a covering onto a connected base. Throws
/// std::domain_error if fibers differ in size.
std::int64_t covering_degree(const ColoredGraph& h, const ColoredGraph& g, const GraphMap& p);

}  // namespace cover
