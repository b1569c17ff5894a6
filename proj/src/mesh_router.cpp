#include "pyrt/mesh_router.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

// Splits the edge subset `ids` (a regular bipartite multigraph of the given
// even degree) into two halves of half the degree and recurses. `left_count`
// is the number of vertices on each side.
void color_by_splitting(std::span<const Demand> demands,
                        std::vector<std::uint32_t> ids, std::uint32_t degree,
                        std::uint32_t color_base, std::uint32_t left_count,
                        std::vector<std::uint32_t>& colors) {
  if (degree == 1) {
    for (std::uint32_t e : ids) colors[e] = color_base;
    return;
  }
  const std::uint32_t vertex_count = 2 * left_count;
  std::vector<std::uint32_t> offsets(vertex_count + 1, 0);
  for (std::uint32_t e : ids) {
    ++offsets[demands[e].first + 1];
    ++offsets[left_count + demands[e].second + 1];
  }
  for (std::uint32_t v = 0; v < vertex_count; ++v) offsets[v + 1] += offsets[v];
  // Incidences hold positions into `ids`.
  std::vector<std::uint32_t> incidence(offsets.back());
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    incidence[fill[demands[ids[i]].first]++] = i;
    incidence[fill[left_count + demands[ids[i]].second]++] = i;
  }

  std::vector<bool> used(ids.size(), false);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  auto next_unused = [&](std::uint32_t v) -> std::optional<std::uint32_t> {
    while (cursor[v] < offsets[v + 1] && used[incidence[cursor[v]]]) {
      ++cursor[v];
    }
    if (cursor[v] == offsets[v + 1]) return std::nullopt;
    return incidence[cursor[v]];
  };

  // Walking closed trails orients every edge so that each vertex has equal
  // in- and out-degree. Left-to-right edges form one half, right-to-left the
  // other; each half is then regular of degree / 2.
  std::vector<std::uint32_t> forward;
  std::vector<std::uint32_t> backward;
  forward.reserve(ids.size() / 2);
  backward.reserve(ids.size() / 2);
  for (std::uint32_t start = 0; start < vertex_count; ++start) {
    while (next_unused(start)) {
      std::uint32_t at = start;
      while (const auto i = next_unused(at)) {
        used[*i] = true;
        const Demand& d = demands[ids[*i]];
        if (at < left_count) {
          forward.push_back(ids[*i]);
          at = left_count + d.second;
        } else {
          backward.push_back(ids[*i]);
          at = d.first;
        }
      }
      if (at != start) {
        throw InvariantError("euler split: trail did not close");
      }
    }
  }
  const std::uint32_t half = degree / 2;
  color_by_splitting(demands, std::move(forward), half, color_base, left_count,
                     colors);
  color_by_splitting(demands, std::move(backward), half, color_base + half,
                     left_count, colors);
}

void check_grid(std::uint64_t side, int dim, std::size_t vertex_count,
                std::size_t perm_size) {
  if (dim < 1 || side < 1 || !std::has_single_bit(side)) {
    throw ArgumentError("mesh routing needs d >= 1 and a power-of-two side, "
                        "got side=" + std::to_string(side));
  }
  std::uint64_t size = 1;
  for (int k = 0; k < dim; ++k) size *= side;
  if (vertex_count != size || perm_size != size) {
    throw ArgumentError("grid of side " + std::to_string(side) + " and d=" +
                        std::to_string(dim) + " has " + std::to_string(size) +
                        " vertices, got " + std::to_string(vertex_count) +
                        " vertices and a permutation of size " +
                        std::to_string(perm_size));
  }
}

}  // namespace

Trace route_line(std::span<const VertexId> line, const Permutation& dest) {
  const std::size_t n = line.size();
  if (dest.size() != n) {
    throw ArgumentError("route_line: permutation size does not match path");
  }
  std::vector<std::uint32_t> target(dest.images().begin(), dest.images().end());
  Trace trace;
  for (std::size_t t = 1; t <= n; ++t) {
    std::vector<Edge> swaps;
    for (std::size_t p = t % 2; p + 1 < n; p += 2) {
      if (target[p] > target[p + 1]) {
        std::swap(target[p], target[p + 1]);
        swaps.emplace_back(line[p], line[p + 1]);
      }
    }
    trace.push_step(Matching(std::move(swaps)));
  }
  if (!std::is_sorted(target.begin(), target.end())) {
    throw InvariantError("odd-even transposition left the path unsorted");
  }
  return trace;
}

Trace route_path(std::size_t n, const Permutation& pi) {
  std::vector<VertexId> line(n);
  for (std::size_t p = 0; p < n; ++p) line[p] = static_cast<VertexId>(p);
  return route_line(line, pi);
}

Trace distance_swap_trace(std::size_t path_length, std::size_t a,
                          std::size_t b) {
  if (a > b || b > path_length) {
    throw ArgumentError("distance swap positions (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") invalid for path length " +
                        std::to_string(path_length));
  }
  Trace trace;
  for (std::size_t p = a; p < b; ++p) {
    trace.push_step(Matching{canonical_edge(static_cast<VertexId>(p),
                                            static_cast<VertexId>(p + 1))});
  }
  for (std::size_t p = b; p > a + 1; --p) {
    trace.push_step(Matching{canonical_edge(static_cast<VertexId>(p - 2),
                                            static_cast<VertexId>(p - 1))});
  }
  return trace;
}

std::vector<std::uint32_t> color_regular_bipartite(
    std::span<const Demand> demands, std::uint32_t degree) {
  if (degree == 0) {
    if (!demands.empty()) throw ArgumentError("non-regular: degree 0 with edges");
    return {};
  }
  if (!std::has_single_bit(degree)) throw UnsupportedDegreeError(degree);
  if (demands.size() % degree != 0) {
    throw ArgumentError("non-regular: edge count is not a multiple of degree");
  }
  const auto left_count = static_cast<std::uint32_t>(demands.size() / degree);
  std::vector<std::uint32_t> left_degree(left_count, 0);
  std::vector<std::uint32_t> right_degree(left_count, 0);
  for (const auto& [l, r] : demands) {
    if (l >= left_count || r >= left_count) {
      throw ArgumentError("non-regular: endpoint outside [0, " +
                          std::to_string(left_count) + ")");
    }
    ++left_degree[l];
    ++right_degree[r];
  }
  for (std::uint32_t v = 0; v < left_count; ++v) {
    if (left_degree[v] != degree || right_degree[v] != degree) {
      throw ArgumentError("non-regular: vertex " + std::to_string(v) +
                          " does not have degree " + std::to_string(degree));
    }
  }
  std::vector<std::uint32_t> ids(demands.size());
  for (std::uint32_t e = 0; e < ids.size(); ++e) ids[e] = e;
  std::vector<std::uint32_t> colors(demands.size(), 0);
  color_by_splitting(demands, std::move(ids), degree, 0, left_count, colors);
  return colors;
}

std::vector<std::uint32_t> mesh_phase_slots(std::uint64_t side, int dim,
                                            const Permutation& dest) {
  check_grid(side, dim, dest.size(), dest.size());
  if (dim < 2) throw ArgumentError("phase slots need d >= 2");
  std::vector<Demand> demands(dest.size());
  for (std::uint32_t p = 0; p < dest.size(); ++p) {
    demands[p] = {static_cast<std::uint32_t>(p / side),
                  static_cast<std::uint32_t>(dest(p) / side)};
  }
  return color_regular_bipartite(demands, static_cast<std::uint32_t>(side));
}

Trace route_grid(std::span<const VertexId> vertices, std::uint64_t side,
                 int dim, const Permutation& dest) {
  check_grid(side, dim, vertices.size(), dest.size());
  if (dest.is_identity()) return {};
  if (dim == 1) return route_line(vertices, dest);

  // Lines run along the last axis; line L holds positions L*side .. +side-1.
  const std::size_t size = vertices.size();
  const std::size_t lines = size / side;
  const std::vector<std::uint32_t> slot = mesh_phase_slots(side, dim, dest);

  // Phase 1: within each line, move every pebble to its slot.
  std::vector<Trace> parts;
  parts.reserve(std::max<std::size_t>(lines, side));
  std::vector<std::uint32_t> local(side);
  std::vector<VertexId> line_vertices(side);
  for (std::size_t line = 0; line < lines; ++line) {
    for (std::size_t t = 0; t < side; ++t) {
      local[t] = slot[line * side + t];
      line_vertices[t] = vertices[line * side + t];
    }
    parts.push_back(route_line(line_vertices, Permutation(local)));
  }
  Trace trace = merge_parallel(parts);

  // Phase 2: in each cross-section (fixed slot), move pebbles to their
  // destination line.
  std::vector<std::size_t> origin(size);  // origin[line*side + slot] = p
  for (std::size_t p = 0; p < size; ++p) origin[(p / side) * side + slot[p]] = p;
  parts.clear();
  std::vector<std::uint32_t> cross_dest(lines);
  std::vector<VertexId> cross_vertices(lines);
  for (std::size_t s = 0; s < side; ++s) {
    for (std::size_t line = 0; line < lines; ++line) {
      cross_vertices[line] = vertices[line * side + s];
      cross_dest[line] =
          static_cast<std::uint32_t>(dest(origin[line * side + s]) / side);
    }
    parts.push_back(
        route_grid(cross_vertices, side, dim - 1, Permutation(cross_dest)));
  }
  trace.append(merge_parallel(parts));

  // Phase 3: within each line, move pebbles to their final position.
  std::vector<std::uint32_t> final_pos(size);
  for (std::size_t p = 0; p < size; ++p) {
    const std::size_t at = (dest(p) / side) * side + slot[p];
    final_pos[at] = static_cast<std::uint32_t>(dest(p) % side);
  }
  parts.clear();
  for (std::size_t line = 0; line < lines; ++line) {
    for (std::size_t t = 0; t < side; ++t) {
      local[t] = final_pos[line * side + t];
      line_vertices[t] = vertices[line * side + t];
    }
    parts.push_back(route_line(line_vertices, Permutation(local)));
  }
  trace.append(merge_parallel(parts));
  return trace;
}

Trace route_mesh(std::uint64_t side, int dim, const Permutation& pi) {
  std::vector<VertexId> vertices(pi.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    vertices[v] = static_cast<VertexId>(v);
  }
  return route_grid(vertices, side, dim, pi);
}

std::uint64_t mesh_step_bound(std::uint64_t side, int dim) {
  return (2 * static_cast<std::uint64_t>(dim) - 1) * side;
}

}  // namespace pyrt
