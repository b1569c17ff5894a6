#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pyrt/engine.hpp"
#include "pyrt/permutation.hpp"
#include "pyrt/types.hpp"

namespace pyrt {

// Odd-even transposition along an embedded path. `line[p]` is the vertex at
// path position p and the pebble there must reach position dest(p). Step t
// (1-based) compare-exchanges the odd-indexed edges (p, p+1), p odd, when t
// is odd and the even-indexed ones when t is even, swapping only pebbles
// that are out of destination order. At most line.size() steps.
Trace route_line(std::span<const VertexId> line, const Permutation& dest);

// route_line on build_path(n).
Trace route_path(std::size_t n, const Permutation& pi);

// Exchanges the pebbles at positions a and b of a path with path_length + 1
// vertices (positions 0..path_length) and restores all others, using the
// transpositions (a,a+1) ... (b-1,b) then (b-2,b-1) ... (a,a+1).
Trace distance_swap_trace(std::size_t path_length, std::size_t a,
                          std::size_t b);

using Demand = std::pair<std::uint32_t, std::uint32_t>;

// Proper edge coloring of a degree-regular bipartite multigraph given as
// (left, right) edges. Colors are in [0, degree). Degree must be a power of
// two; the graph is split along Eulerian orientations, one halving per level.
std::vector<std::uint32_t> color_regular_bipartite(
    std::span<const Demand> demands, std::uint32_t degree);

// Phase-one slot (last-axis coordinate) assigned to each pebble by the mesh
// recursion: pebbles sharing a slot have distinct destination lines.
std::vector<std::uint32_t> mesh_phase_slots(std::uint64_t side, int dim,
                                            const Permutation& dest);

// Routes `dest` on the row-major d-dimensional grid embedded at `vertices`.
// Side must be a power of two. Length <= (2d - 1) * side.
Trace route_grid(std::span<const VertexId> vertices, std::uint64_t side,
                 int dim, const Permutation& dest);

// route_grid on build_mesh(side, dim).
Trace route_mesh(std::uint64_t side, int dim, const Permutation& pi);

// (2d - 1) * side.
std::uint64_t mesh_step_bound(std::uint64_t side, int dim);

}  // namespace pyrt
