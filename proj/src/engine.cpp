#include "pyrt/engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

std::string step_suffix(std::optional<std::size_t> step) {
  return step ? " at step " + std::to_string(*step) : std::string();
}

// `stamp` holds, per vertex, the last step token that used it.
void apply_checked(std::vector<VertexId>& placement, const Matching& m,
                   const Graph& graph, std::optional<std::size_t> step,
                   std::vector<std::size_t>& stamp, std::size_t token) {
  for (const auto& [u, v] : m.swaps()) {
    if (!graph.has_edge(u, v)) {
      throw TraceError(TraceFault::kInvalidEdge, step, u,
                       "invalid-edge" + step_suffix(step) + ": (" +
                           std::to_string(u) + "," + std::to_string(v) +
                           ") is not an edge");
    }
    for (VertexId w : {u, v}) {
      if (stamp[w] == token) {
        throw TraceError(TraceFault::kNotAMatching, step, w,
                         "not-a-matching" + step_suffix(step) + ": vertex " +
                             std::to_string(w) + " used twice");
      }
      stamp[w] = token;
    }
    std::swap(placement[u], placement[v]);
  }
}

}  // namespace

const char* to_string(TraceFault fault) {
  switch (fault) {
    case TraceFault::kInvalidEdge:
      return "invalid-edge";
    case TraceFault::kNotAMatching:
      return "not-a-matching";
    case TraceFault::kNotRouted:
      return "not-routed";
  }
  return "unknown";
}

TraceError::TraceError(TraceFault fault, std::optional<std::size_t> step,
                       VertexId vertex, const std::string& detail)
    : Error(detail), fault_(fault), step_(step), vertex_(vertex) {}

Matching::Matching(std::vector<Edge> swaps) : swaps_(std::move(swaps)) {
  for (Edge& e : swaps_) e = canonical_edge(e.first, e.second);
  std::sort(swaps_.begin(), swaps_.end());
}

Trace::Trace(std::vector<Matching> steps) {
  for (Matching& m : steps) push_step(std::move(m));
}

void Trace::push_step(Matching step) {
  if (!step.empty()) steps_.push_back(std::move(step));
}

void Trace::append(const Trace& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

Configuration::Configuration(std::vector<VertexId> placement)
    : placement_(std::move(placement)) {
  // Reuse the bijection check.
  Permutation check(placement_);
}

Configuration Configuration::identity(std::size_t n) {
  std::vector<VertexId> placement(n);
  std::iota(placement.begin(), placement.end(), 0U);
  return Configuration(std::move(placement));
}

std::optional<VertexId> Configuration::first_misplaced() const {
  for (VertexId v = 0; v < placement_.size(); ++v) {
    if (placement_[v] != v) return v;
  }
  return std::nullopt;
}

Configuration initial_configuration(const RouteProblem& problem) {
  if (problem.pi.size() != problem.graph.vertex_count()) {
    throw ArgumentError("permutation size " +
                        std::to_string(problem.pi.size()) +
                        " does not match vertex count " +
                        std::to_string(problem.graph.vertex_count()));
  }
  const auto images = problem.pi.images();
  return Configuration(std::vector<VertexId>(images.begin(), images.end()));
}

Configuration apply_matching(Configuration config, const Matching& m,
                             const Graph& graph) {
  std::vector<VertexId> placement(config.placement().begin(),
                                  config.placement().end());
  std::vector<std::size_t> stamp(graph.vertex_count(), 0);
  apply_checked(placement, m, graph, std::nullopt, stamp, 1);
  return Configuration(std::move(placement));
}

std::size_t validate_trace(const RouteProblem& problem, const Trace& trace) {
  const Configuration start = initial_configuration(problem);
  std::vector<VertexId> placement(start.placement().begin(),
                                  start.placement().end());
  std::vector<std::size_t> stamp(problem.graph.vertex_count(), 0);
  for (std::size_t t = 0; t < trace.length(); ++t) {
    apply_checked(placement, trace.steps()[t], problem.graph, t, stamp, t + 1);
  }
  for (VertexId v = 0; v < placement.size(); ++v) {
    if (placement[v] != v) {
      throw TraceError(TraceFault::kNotRouted, std::nullopt, v,
                       "not-routed: pebble " + std::to_string(placement[v]) +
                           " rests on vertex " + std::to_string(v));
    }
  }
  return trace.length();
}

Trace merge_parallel(std::span<const Trace> traces) {
  if (traces.size() == 1) return traces.front();
  std::unordered_map<VertexId, std::size_t> owner;
  std::size_t length = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    length = std::max(length, traces[i].length());
    for (const Matching& m : traces[i].steps()) {
      for (const auto& [u, v] : m.swaps()) {
        for (VertexId w : {u, v}) {
          const auto [it, inserted] = owner.emplace(w, i);
          if (!inserted && it->second != i) throw ParallelConflictError(w);
        }
      }
    }
  }
  std::vector<Matching> merged;
  merged.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    std::vector<Edge> swaps;
    for (const Trace& trace : traces) {
      if (t < trace.length()) {
        const auto& s = trace.steps()[t].swaps();
        swaps.insert(swaps.end(), s.begin(), s.end());
      }
    }
    merged.emplace_back(std::move(swaps));
  }
  Trace out(std::move(merged));
  if (!traces.empty()) out.meta = traces.front().meta;
  return out;
}

Trace merge_parallel(std::span<const Trace> traces, const Graph& graph) {
  for (const Trace& trace : traces) {
    for (const Matching& m : trace.steps()) {
      for (const auto& [u, v] : m.swaps()) {
        if (v >= graph.vertex_count()) {
          throw ArgumentError("merge_parallel: vertex " + std::to_string(v) +
                              " outside the graph");
        }
      }
    }
  }
  return merge_parallel(traces);
}

}  // namespace pyrt
