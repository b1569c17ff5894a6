#include "pyrt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                            " vertices exceeds the oracle cap of " +
                            std::to_string(cap),
                        n);
  }
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void extend_matchings(const std::vector<Edge>& edges, std::size_t next,
                      std::vector<bool>& used, std::vector<Edge>& current,
                      std::vector<Matching>& out) {
  for (std::size_t e = next; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = true;
    current.push_back(edges[e]);
    out.emplace_back(current);
    extend_matchings(edges, e + 1, used, current, out);
    current.pop_back();
    used[u] = used[v] = false;
  }
}

// Configurations reached in one step from `placement`, as ranks.
template <typename Visit>
void for_each_neighbor(std::vector<std::uint32_t>& placement,
                       const std::vector<Matching>& moves, Visit&& visit) {
  for (const Matching& m : moves) {
    for (const auto& [u, v] : m.swaps()) std::swap(placement[u], placement[v]);
    visit(permutation_rank(placement));
    for (const auto& [u, v] : m.swaps()) std::swap(placement[u], placement[v]);
  }
}

}  // namespace

std::vector<Matching> all_matchings(const Graph& graph,
                                    const OracleLimits& limits) {
  check_cap(graph.vertex_count(), limits.max_matching_vertices, "all_matchings");
  std::vector<Matching> out;
  std::vector<bool> used(graph.vertex_count(), false);
  std::vector<Edge> current;
  extend_matchings(graph.edges(), 0, used, current, out);
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.swaps() < b.swaps();
  });
  return out;
}

std::size_t exact_rt(const RouteProblem& problem, const OracleLimits& limits) {
  const std::size_t n = problem.graph.vertex_count();
  check_cap(n, limits.max_search_vertices, "exact_rt");
  const Configuration start = initial_configuration(problem);
  const std::uint64_t start_rank = permutation_rank(start.placement());
  const std::uint64_t goal_rank = 0;  // identity
  if (start_rank == goal_rank) return 0;

  const std::vector<Matching> moves =
      all_matchings(problem.graph, {.max_matching_vertices = n});
  std::vector<std::uint8_t> dist(factorial(n), kUnseen);
  std::vector<std::uint64_t> frontier = {start_rank};
  dist[start_rank] = 0;
  std::vector<std::uint32_t> placement(n);
  for (std::uint8_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t rank : frontier) {
      permutation_unrank(rank, placement);
      bool found = false;
      for_each_neighbor(placement, moves, [&](std::uint64_t r) {
        if (dist[r] != kUnseen) return;
        dist[r] = static_cast<std::uint8_t>(depth + 1);
        found = found || r == goal_rank;
        next.push_back(r);
      });
      if (found) return depth + 1u;
    }
    frontier = std::move(next);
  }
  // Unreachable: the routed configuration is not reachable, so the graph is
  // disconnected.
  throw ArgumentError("exact_rt: permutation cannot be routed on this graph");
}

std::vector<std::uint8_t> routing_time_table(const Graph& graph,
                                             const OracleLimits& limits) {
  const std::size_t n = graph.vertex_count();
  check_cap(n, limits.max_enumeration_vertices, "routing_time_table");
  const std::vector<Matching> moves =
      all_matchings(graph, {.max_matching_vertices = n});
  std::vector<std::uint8_t> dist(factorial(n), kUnseen);
  std::vector<std::uint64_t> frontier = {0};
  dist[0] = 0;
  std::vector<std::uint32_t> placement(n);
  for (std::uint8_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t rank : frontier) {
      permutation_unrank(rank, placement);
      for_each_neighbor(placement, moves, [&](std::uint64_t r) {
        if (dist[r] != kUnseen) return;
        dist[r] = static_cast<std::uint8_t>(depth + 1);
        next.push_back(r);
      });
    }
    frontier = std::move(next);
  }
  if (std::find(dist.begin(), dist.end(), kUnseen) != dist.end()) {
    throw ArgumentError("routing_time_table: graph is disconnected");
  }
  return dist;
}

std::size_t exact_routing_number(const Graph& graph,
                                 const OracleLimits& limits) {
  const auto table = routing_time_table(graph, limits);
  return *std::max_element(table.begin(), table.end());
}

std::uint64_t permutation_rank(std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

void permutation_unrank(std::uint64_t rank, std::span<std::uint32_t> out) {
  const std::size_t n = out.size();
  // Lehmer digits, least significant last.
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    out[i] = static_cast<std::uint32_t>(rank % base);
    rank /= base;
  }
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t k = 0; k < n; ++k) pool[k] = k;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t digit = out[i];
    out[i] = pool[digit];
    pool.erase(pool.begin() + digit);
  }
}

}  // namespace pyrt
