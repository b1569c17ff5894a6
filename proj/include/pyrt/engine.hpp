#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pyrt/permutation.hpp"
#include "pyrt/topology.hpp"
#include "pyrt/types.hpp"

namespace pyrt {

// One routing step: the pebbles on both ends of every pair are exchanged.
// Pairs are kept canonical and sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> swaps);
  Matching(std::initializer_list<Edge> swaps)
      : Matching(std::vector<Edge>(swaps)) {}

  const std::vector<Edge>& swaps() const { return swaps_; }
  bool empty() const { return swaps_.empty(); }
  std::size_t size() const { return swaps_.size(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> swaps_;
};

struct TraceMeta {
  std::string graph;
  std::string perm;
  std::string algo;
};

// Ordered matchings; empty matchings are never stored, so length() is the
// step count.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<Matching> steps);

  void push_step(Matching step);
  void append(const Trace& other);

  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Matching>& steps() const { return steps_; }

  TraceMeta meta;

 private:
  std::vector<Matching> steps_;
};

// placement[v] is the label of the pebble on vertex v. Routed once every
// pebble w sits on vertex w.
class Configuration {
 public:
  explicit Configuration(std::vector<VertexId> placement);
  static Configuration identity(std::size_t n);

  std::size_t size() const { return placement_.size(); }
  VertexId pebble_at(VertexId v) const { return placement_[v]; }
  std::span<const VertexId> placement() const { return placement_; }
  bool is_routed() const { return !first_misplaced(); }
  // Smallest vertex whose pebble is not at home.
  std::optional<VertexId> first_misplaced() const;

  void swap(VertexId u, VertexId v) { std::swap(placement_[u], placement_[v]); }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<VertexId> placement_;
};

// The pebble initially on v is destined for pi(v).
struct RouteProblem {
  const Graph& graph;
  const Permutation& pi;
};

Configuration initial_configuration(const RouteProblem& problem);

// Throws TraceError (kInvalidEdge or kNotAMatching) if `m` is not a matching
// of `graph`.
Configuration apply_matching(Configuration config, const Matching& m,
                             const Graph& graph);

// Replays `trace` from the initial configuration. Returns the step count, or
// throws TraceError describing the earliest failure.
std::size_t validate_trace(const RouteProblem& problem, const Trace& trace);

// Unions step t of every input. Inputs must touch pairwise-disjoint vertex
// sets, otherwise ParallelConflictError names the shared vertex.
Trace merge_parallel(std::span<const Trace> traces);
Trace merge_parallel(std::span<const Trace> traces, const Graph& graph);

}  // namespace pyrt
