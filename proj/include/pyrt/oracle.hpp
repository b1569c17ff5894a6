#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pyrt/engine.hpp"
#include "pyrt/topology.hpp"

namespace pyrt {

// Exact routing times by breadth-first search over pebble configurations.
// Only meant for tiny graphs; every entry point enforces a vertex cap.
struct OracleLimits {
  std::size_t max_matching_vertices = 10;
  std::size_t max_search_vertices = 8;
  std::size_t max_enumeration_vertices = 7;
};

// Every non-empty matching, each sorted, ordered lexicographically.
std::vector<Matching> all_matchings(const Graph& graph,
                                    const OracleLimits& limits = {});

// Shortest number of matching steps from the initial configuration of
// `problem` to the routed one.
std::size_t exact_rt(const RouteProblem& problem,
                     const OracleLimits& limits = {});

// Distance to the routed configuration for every configuration, indexed by
// permutation_rank of the placement (equivalently, of pi). One BFS from the
// identity; matchings are self-inverse so the move graph is undirected.
std::vector<std::uint8_t> routing_time_table(const Graph& graph,
                                             const OracleLimits& limits = {});

// max over pi of exact_rt.
std::size_t exact_routing_number(const Graph& graph,
                                 const OracleLimits& limits = {});

// Lehmer-code rank in [0, n!) and its inverse.
std::uint64_t permutation_rank(std::span<const std::uint32_t> perm);
void permutation_unrank(std::uint64_t rank, std::span<std::uint32_t> out);

}  // namespace pyrt
