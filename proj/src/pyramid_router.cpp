#include "pyrt/pyramid_router.hpp"

#include <algorithm>
#include <string>

#include "pyrt/error.hpp"
#include "pyrt/mesh_router.hpp"

namespace pyrt {
namespace {

constexpr std::array<int, 2> kEvenRounds = {2, 4};

struct InterLevelPair {
  PebblePair pair;
  int upper_level;
  int lower_level;
  PathAssignment assignment;
};

std::vector<InterLevelPair> assigned_pairs(const PairPlan& plan, int round) {
  std::vector<InterLevelPair> out;
  for (const auto& [levels, pairs] : plan.pairs) {
    if (levels.first == levels.second) continue;
    for (const PebblePair& p : pairs) {
      const auto it = plan.assignment.find(p.upper);
      if (it == plan.assignment.end()) {
        throw InvariantError("pair (" + std::to_string(p.upper) + ", " +
                             std::to_string(p.lower) + ") has no path");
      }
      if (it->second.round == round) {
        out.push_back({p, levels.first, levels.second, it->second});
      }
    }
  }
  return out;
}

// Extends a partial injection on [0, n) to a permutation. Unmapped points
// stay put unless their spot is a target; displaced points take the vacated
// spots, both in ascending order.
Permutation extend_partial(
    std::size_t n,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fixed) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(n, kUnset);
  std::vector<bool> taken(n, false);
  for (const auto& [source, target] : fixed) {
    if (image[source] != kUnset || taken[target]) {
      throw InvariantError("staging conflict at level-local index " +
                           std::to_string(taken[target] ? target : source));
    }
    image[source] = target;
    taken[target] = true;
  }
  std::vector<std::uint32_t> displaced;
  for (std::uint32_t p = 0; p < n; ++p) {
    if (image[p] != kUnset) continue;
    if (taken[p]) {
      displaced.push_back(p);
    } else {
      image[p] = p;
      taken[p] = true;
    }
  }
  auto next_free = displaced.begin();
  for (std::uint32_t p = 0; p < n && next_free != displaced.end(); ++p) {
    if (!taken[p]) {
      image[*next_free++] = p;
      taken[p] = true;
    }
  }
  return Permutation(std::move(image));
}

// Tracks where each pebble (named by its vertex at the start of the pass)
// currently sits.
class PebbleTracker {
 public:
  PebbleTracker(const PyramidSpec& spec, const Layout& layout)
      : spec_(spec), layout_(layout) {
    const std::size_t n = layout.vertex_count();
    location_.resize(n);
    occupant_.resize(n);
    for (VertexId v = 0; v < n; ++v) location_[v] = occupant_[v] = v;
  }

  VertexId location(VertexId pebble) const { return location_[pebble]; }
  VertexId occupant(VertexId vertex) const { return occupant_[vertex]; }

  // Moves each requested pebble to its target vertex on the same level and
  // returns the per-level permutation that was applied.
  std::vector<Permutation> stage(
      const std::vector<std::pair<VertexId, VertexId>>& requests) {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> fixed(
        spec_.levels);
    for (const auto& [pebble, target] : requests) {
      const VertexId from = location_[pebble];
      const int level = layout_.level_of(from);
      if (layout_.level_of(target) != level) {
        throw InvariantError("pebble " + std::to_string(pebble) +
                             " on level " + std::to_string(level) +
                             " staged to vertex " + std::to_string(target) +
                             " on another level");
      }
      const VertexId offset = layout_.level_offset(level);
      fixed[level].emplace_back(from - offset, target - offset);
    }
    std::vector<Permutation> perms;
    perms.reserve(spec_.levels);
    for (int l = 0; l < spec_.levels; ++l) {
      const VertexId offset = layout_.level_offset(l);
      const std::size_t size = layout_.level_size(l);
      Permutation perm = extend_partial(size, fixed[l]);
      std::vector<VertexId> moved(size);
      for (std::uint32_t u = 0; u < size; ++u) moved[perm(u)] = occupant_[offset + u];
      for (std::uint32_t u = 0; u < size; ++u) {
        occupant_[offset + u] = moved[u];
        location_[moved[u]] = offset + u;
      }
      perms.push_back(std::move(perm));
    }
    return perms;
  }

  void swap_vertices(VertexId a, VertexId b) {
    std::swap(occupant_[a], occupant_[b]);
    location_[occupant_[a]] = a;
    location_[occupant_[b]] = b;
  }

 private:
  PyramidSpec spec_;
  const Layout& layout_;
  std::vector<VertexId> location_;
  std::vector<VertexId> occupant_;
};

std::vector<std::pair<VertexId, VertexId>> endpoint_requests(
    const std::vector<InterLevelPair>& pairs, const VerticalPathSet& paths) {
  std::vector<std::pair<VertexId, VertexId>> requests;
  for (const InterLevelPair& p : pairs) {
    const auto& path = paths.paths.at(p.assignment.path);
    requests.emplace_back(p.pair.upper, path.front());
    requests.emplace_back(p.pair.lower, path.at(p.lower_level - p.upper_level));
  }
  return requests;
}

void run_even_round(const std::vector<InterLevelPair>& pairs,
                    const VerticalPathSet& paths, PebbleTracker& tracker) {
  for (const InterLevelPair& p : pairs) {
    const auto& path = paths.paths.at(p.assignment.path);
    const VertexId top = path.front();
    const VertexId bottom = path.at(p.lower_level - p.upper_level);
    if (tracker.occupant(top) != p.pair.upper ||
        tracker.occupant(bottom) != p.pair.lower) {
      throw InvariantError("pair (" + std::to_string(p.pair.upper) + ", " +
                           std::to_string(p.pair.lower) +
                           ") is not staged on its path endpoints");
    }
    tracker.swap_vertices(top, bottom);
  }
}

Trace odd_round_trace(const std::vector<Permutation>& staging,
                      const PyramidSpec& spec, const Layout& layout) {
  std::vector<Trace> parts;
  for (int l = 0; l < spec.levels; ++l) {
    if (staging[l].is_identity()) continue;
    const VertexId offset = layout.level_offset(l);
    std::vector<VertexId> vertices(layout.level_size(l));
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      vertices[k] = static_cast<VertexId>(offset + k);
    }
    parts.push_back(
        route_grid(vertices, spec.level_side(l), spec.dim, staging[l]));
  }
  return merge_parallel(parts);
}

Trace even_round_trace(const std::vector<InterLevelPair>& pairs,
                       const VerticalPathSet& paths) {
  std::vector<Trace> parts;
  for (const InterLevelPair& p : pairs) {
    const auto& path = paths.paths.at(p.assignment.path);
    const Trace local = distance_swap_trace(
        path.size() - 1, 0, static_cast<std::size_t>(p.lower_level - p.upper_level));
    Trace mapped;
    for (const Matching& m : local.steps()) {
      std::vector<Edge> swaps;
      for (const auto& [a, b] : m.swaps()) swaps.emplace_back(path[a], path[b]);
      mapped.push_step(Matching(std::move(swaps)));
    }
    parts.push_back(std::move(mapped));
  }
  return merge_parallel(parts);
}

InvolutionPass route_involution(const Permutation& sigma,
                                const PyramidSpec& spec, const Layout& layout,
                                const VerticalPathSet& paths) {
  InvolutionPass pass;
  pass.sigma = sigma;
  pass.plan = plan_staging(assign_paths(classify_pairs(sigma, spec), paths, spec),
                           sigma, paths, spec);
  for (int r = 0; r < 3; ++r) {
    pass.rounds[2 * r] = odd_round_trace(pass.plan.staging[r], spec, layout);
  }
  for (int r = 0; r < 2; ++r) {
    pass.rounds[2 * r + 1] =
        even_round_trace(assigned_pairs(pass.plan, kEvenRounds[r]), paths);
  }
  return pass;
}

}  // namespace

std::size_t PairPlan::mu(int i, int j) const {
  const auto it = pairs.find({std::min(i, j), std::max(i, j)});
  return it == pairs.end() ? 0 : it->second.size();
}

std::size_t PairPlan::moving_up_to(int level) const {
  std::size_t count = 0;
  for (const auto& [levels, list] : pairs) {
    if (levels.first == level && levels.second > level) count += list.size();
  }
  return count;
}

PairPlan classify_pairs(const Permutation& sigma, const PyramidSpec& spec) {
  const Layout layout = Layout::for_pyramid(spec, GraphKind::kMultigrid);
  if (sigma.size() != layout.vertex_count()) {
    throw ArgumentError("involution has size " + std::to_string(sigma.size()) +
                        ", multi-grid has " +
                        std::to_string(layout.vertex_count()) + " vertices");
  }
  if (!sigma.is_involution()) {
    throw ArgumentError("classify_pairs needs an involution");
  }
  PairPlan plan;
  // Ids are level-major, so v < sigma(v) puts v on the upper level.
  for (VertexId v = 0; v < sigma.size(); ++v) {
    const VertexId w = sigma(v);
    if (w <= v) continue;
    plan.pairs[{layout.level_of(v), layout.level_of(w)}].push_back({v, w});
  }
  return plan;
}

PairPlan assign_paths(PairPlan plan, const VerticalPathSet& paths,
                      const PyramidSpec& spec) {
  const Layout layout = Layout::for_pyramid(spec, GraphKind::kMultigrid);
  plan.assignment.clear();
  for (int level = 0; level + 1 < spec.levels; ++level) {
    std::vector<PebblePair> moving;
    for (const auto& [levels, list] : plan.pairs) {
      if (levels.first == level && levels.second > level) {
        moving.insert(moving.end(), list.begin(), list.end());
      }
    }
    if (moving.empty()) continue;
    std::sort(moving.begin(), moving.end());

    std::vector<std::size_t> available;
    for (std::size_t p = 0; p < paths.paths.size(); ++p) {
      if (layout.level_of(paths.paths[p].front()) == level) available.push_back(p);
    }
    if (moving.size() > 2 * available.size()) {
      throw InvariantError("capacity exceeded on level " + std::to_string(level) +
                           ": " + std::to_string(moving.size()) +
                           " pairs for " + std::to_string(available.size()) +
                           " vertical paths");
    }
    for (std::size_t k = 0; k < moving.size(); ++k) {
      const bool first_round = k < available.size();
      const std::size_t slot = first_round ? k : k - available.size();
      plan.assignment[moving[k].upper] = {available[slot], first_round ? 2 : 4};
    }
  }
  return plan;
}

PairPlan plan_staging(PairPlan plan, const Permutation& sigma,
                      const VerticalPathSet& paths, const PyramidSpec& spec) {
  const Layout layout = Layout::for_pyramid(spec, GraphKind::kMultigrid);
  if (sigma.size() != layout.vertex_count()) {
    throw ArgumentError("plan_staging: involution size mismatch");
  }
  PebbleTracker tracker(spec, layout);
  for (int r = 0; r < 2; ++r) {
    const auto pairs = assigned_pairs(plan, kEvenRounds[r]);
    plan.staging[r] = tracker.stage(endpoint_requests(pairs, paths));
    run_even_round(pairs, paths, tracker);
  }
  // Every pebble is now on its destination level.
  std::vector<std::pair<VertexId, VertexId>> finals;
  finals.reserve(sigma.size());
  for (VertexId x = 0; x < sigma.size(); ++x) {
    if (layout.level_of(tracker.location(x)) != layout.level_of(sigma(x))) {
      throw InvariantError("level checkpoint: pebble " + std::to_string(x) +
                           " is not on the level of vertex " +
                           std::to_string(sigma(x)));
    }
    finals.emplace_back(x, sigma(x));
  }
  plan.staging[2] = tracker.stage(finals);
  return plan;
}

Trace InvolutionPass::trace() const {
  Trace out;
  for (const Trace& round : rounds) out.append(round);
  return out;
}

Trace PyramidRouting::trace() const {
  Trace out;
  for (const InvolutionPass& pass : passes) out.append(pass.trace());
  out.meta.algo = "pyramid";
  return out;
}

PyramidRouting route_pyramid_rounds(const PyramidSpec& spec,
                                    const Permutation& pi) {
  const Layout layout = Layout::for_pyramid(spec, GraphKind::kMultigrid);
  if (pi.size() != layout.vertex_count()) {
    throw ArgumentError("permutation has size " + std::to_string(pi.size()) +
                        ", multi-grid has " +
                        std::to_string(layout.vertex_count()) + " vertices");
  }
  const VerticalPathSet paths = vertical_paths(spec);
  const auto [first, second] = decompose_involutions(pi);
  return {{route_involution(first, spec, layout, paths),
           route_involution(second, spec, layout, paths)}};
}

Trace route_pyramid(const PyramidSpec& spec, const Permutation& pi) {
  return route_pyramid_rounds(spec, pi).trace();
}

Trace route_pyramid(const RouteProblem& problem) {
  const auto& layout = problem.graph.layout();
  const auto spec = layout ? layout->pyramid_spec() : std::nullopt;
  if (!spec) {
    throw ArgumentError("pyramid routing needs a pyramid or multi-grid graph");
  }
  return route_pyramid(*spec, problem.pi);
}

std::uint64_t step_bound(const PyramidSpec& spec) {
  if (spec.levels <= 1) return 0;
  const std::uint64_t m = spec.levels;
  const std::uint64_t odd = 3 * mesh_step_bound(spec.level_side(spec.levels - 1),
                                                spec.dim);
  const std::uint64_t even = 2 * (2 * (m - 1) - 1);
  return 2 * (odd + even);
}

}  // namespace pyrt
