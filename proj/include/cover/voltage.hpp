#pragma once

// Permutation-voltage lifts: a source of graph pairs that are guaranteed to
// share a universal cover.

#include <cstdint>
#include <random>
#include <vector>

#include "cover/graph.hpp"
#include "cover/permgroup.hpp"

namespace cover {

/// Lift of `base` with fiber {0..d-1}: vertex (v, x) gets id v*d + x, dart
/// (e, x) gets id e*d + x, runs from (tail e, x) to (head e, voltage[e][x])
/// and has bar (bar e, voltage[e][x]). voltage[bar e] must be the inverse of
/// voltage[e]. The lift carries the base colors.
ColoredGraph voltage_lift(const ColoredGraph& base, const std::vector<Perm>& voltage);

/// Random voltages of degree d on each geometric edge; returns the component
/// of vertex 0 together with its projection onto the base.
Component random_voltage_lift(const ColoredGraph& base, std::uint32_t degree, std::mt19937_64& rng,
                              GraphMap* projection = nullptr);

/// Random connected multigraph on n vertices: a random spanning tree plus
/// `extra_edges` uniformly chosen edges, loops and parallel edges allowed.
ColoredGraph random_connected_multigraph(std::uint32_t n, std::uint32_t extra_edges, std::mt19937_64& rng);

}  // namespace cover
