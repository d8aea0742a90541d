#pragma once

// Named graphs, platonic automorphism groups and symmetry-restricted data
// shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <utility>
#include <vector>

#include "cover/graph.hpp"
#include "cover/permgroup.hpp"
#include "cover/symres.hpp"

namespace fixtures {

using cover::ColoredGraph;
using cover::PermGroup;
using cover::SymRestrictedData;

using EdgeList = std::vector<std::pair<cover::Vertex, cover::Vertex>>;

ColoredGraph complete(std::uint32_t n);
ColoredGraph complete_bipartite(std::uint32_t a, std::uint32_t b);
ColoredGraph cycle(std::uint32_t n);
ColoredGraph path(std::uint32_t n);  // n vertices
ColoredGraph bouquet(std::uint32_t loops);

EdgeList cube_edges();
EdgeList icosahedron_edges();
EdgeList dodecahedron_edges();  // dual of the icosahedron

/// Full automorphism group of a simple graph, acting on its vertices.
PermGroup automorphism_group(std::uint32_t n, const EdgeList& edges);

/// Color graph with one geometric edge 0 -- 1; dart 0 has d0 = 0.
cover::ColorGraph single_edge();
/// Color graph with one vertex and one loop (darts 0 and 1).
cover::ColorGraph single_loop();
/// Path 0 -- 1 -- ... -- (n-1); edge j has darts 2j (tail j) and 2j+1.
cover::ColorGraph color_path(std::uint32_t n);

/// Group acting on a single labeled orbit.
cover::SymGroup transitive(PermGroup g, cover::Dart label);

SymRestrictedData dodeca_cube();
SymRestrictedData icosa_cube();
/// One loop color; Z4 x Z2^2 with stabilizers Z4 and Z2^2 on the two orbits.
SymRestrictedData z4_loop();
/// Path a -- b -- c with S3 at the ends and S3 x Z3 in the middle.
SymRestrictedData path_data();

}  // namespace fixtures
