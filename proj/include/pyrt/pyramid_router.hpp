#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pyrt/engine.hpp"
#include "pyrt/permutation.hpp"
#include "pyrt/topology.hpp"

namespace pyrt {

// Two vertices exchanged by an involution. `upper` is on the lower-numbered
// level (the smaller id when both share a level).
struct PebblePair {
  VertexId upper = 0;
  VertexId lower = 0;

  friend auto operator<=>(const PebblePair&, const PebblePair&) = default;
};

struct PathAssignment {
  std::size_t path = 0;  // index into VerticalPathSet::paths
  int round = 0;         // even round, 2 or 4

  friend bool operator==(const PathAssignment&, const PathAssignment&) = default;
};

// Routing plan for one involution on a multi-grid.
struct PairPlan {
  // (i, j) with i <= j -> pairs with one end on level i and the other on j.
  std::map<std::pair<int, int>, std::vector<PebblePair>> pairs;
  // Inter-level pairs keyed by their upper vertex.
  std::map<VertexId, PathAssignment> assignment;
  // staging[r][l]: level-local permutation applied on level l in odd round
  // 2r + 1. Maps the local index of a pebble's vertex to its target index.
  std::array<std::vector<Permutation>, 3> staging;

  std::size_t mu(int i, int j) const;
  // Number of inter-level pairs whose upper end is on `level`.
  std::size_t moving_up_to(int level) const;
};

// Buckets the 2-cycles of `sigma` by the levels of their endpoints.
PairPlan classify_pairs(const Permutation& sigma, const PyramidSpec& spec);

// Gives each inter-level pair with upper end on level i its own maximal
// vertical path starting at level i. The first phi_{m-1-i} pairs (by upper
// vertex id) use round 2 and the rest reuse the same paths in round 4.
// Throws InvariantError if a level needs more than two rounds.
PairPlan assign_paths(PairPlan plan, const VerticalPathSet& paths,
                      const PyramidSpec& spec);

// Fills in the three odd-round staging permutations by simulating pebble
// positions through the even rounds.
PairPlan plan_staging(PairPlan plan, const Permutation& sigma,
                      const VerticalPathSet& paths, const PyramidSpec& spec);

// Traces for the five rounds of one involution.
struct InvolutionPass {
  Permutation sigma;
  PairPlan plan;
  std::array<Trace, 5> rounds;

  Trace trace() const;
};

struct PyramidRouting {
  std::array<InvolutionPass, 2> passes;

  Trace trace() const;
};

// Five-round routing of each involution factor of pi on the multi-grid,
// first factor first.
PyramidRouting route_pyramid_rounds(const PyramidSpec& spec,
                                    const Permutation& pi);

Trace route_pyramid(const PyramidSpec& spec, const Permutation& pi);

// Accepts a multi-grid or a pyramid graph; the trace only uses multi-grid
// edges either way.
Trace route_pyramid(const RouteProblem& problem);

// Worst-case length of route_pyramid:
// 2 * (3 * (2d - 1) * 2^(m-1) + 2 * max(2(m-1) - 1, 0)) for m >= 2, else 0.
std::uint64_t step_bound(const PyramidSpec& spec);

}  // namespace pyrt
