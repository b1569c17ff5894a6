#include "pyrt/topology.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow2_saturating(std::uint64_t exponent) {
  return exponent >= 64 ? kSaturated : std::uint64_t{1} << exponent;
}

std::uint64_t add_saturating(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

void validate(const PyramidSpec& spec) {
  if (spec.levels < 1 || spec.dim < 1) {
    throw ArgumentError("pyramid needs m >= 1 and d >= 1, got m=" +
                        std::to_string(spec.levels) +
                        " d=" + std::to_string(spec.dim));
  }
}

void check_size(std::uint64_t requested, const BuildLimits& limits) {
  const std::uint64_t cap =
      std::min<std::uint64_t>(limits.max_vertices,
                              std::numeric_limits<VertexId>::max());
  if (requested > cap) {
    throw ResourceError("requested N=" + std::to_string(requested) +
                            " exceeds the vertex cap of " + std::to_string(cap),
                        requested);
  }
}

std::uint64_t mesh_size(std::uint64_t side, int dim) {
  std::uint64_t size = 1;
  for (int k = 0; k < dim; ++k) size = mul_saturating(size, side);
  return size;
}

// Appends the grid edges of one mesh block whose vertices start at `offset`.
void append_mesh_edges(std::uint64_t offset, std::uint64_t side, int dim,
                       std::vector<Edge>& edges) {
  const std::uint64_t size = mesh_size(side, dim);
  std::vector<std::uint64_t> stride(dim);
  std::uint64_t s = 1;
  for (int k = dim - 1; k >= 0; --k) {
    stride[k] = s;
    s *= side;
  }
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    for (int k = 0; k < dim; ++k) {
      const std::uint64_t coord = (idx / stride[k]) % side;
      if (coord + 1 < side) {
        edges.emplace_back(static_cast<VertexId>(offset + idx),
                           static_cast<VertexId>(offset + idx + stride[k]));
      }
    }
  }
}

Graph build_pyramid_like(const PyramidSpec& spec, const BuildLimits& limits,
                         GraphKind kind) {
  validate(spec);
  const std::uint64_t n = spec.vertex_count();
  check_size(n, limits);
  Layout layout = Layout::for_pyramid(spec, kind);

  std::vector<Edge> edges;
  for (int l = 0; l < spec.levels; ++l) {
    append_mesh_edges(spec.level_offset(l), spec.level_side(l), spec.dim,
                      edges);
  }
  const std::uint32_t child_masks =
      kind == GraphKind::kPyramid ? (std::uint32_t{1} << spec.dim) : 1;
  for (int l = 0; l + 1 < spec.levels; ++l) {
    const std::uint64_t offset = spec.level_offset(l);
    for (std::uint64_t j = 0; j < spec.level_size(l); ++j) {
      const VertexId parent = static_cast<VertexId>(offset + j);
      LevelCoord child = layout.coord_of(parent);
      const std::vector<std::uint32_t> base = child.coords;
      child.level = l + 1;
      for (std::uint32_t mask = 0; mask < child_masks; ++mask) {
        for (int k = 0; k < spec.dim; ++k) {
          child.coords[k] = 2 * base[k] + ((mask >> k) & 1U);
        }
        edges.emplace_back(parent, layout.vertex_at(child));
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges),
               std::move(layout));
}

}  // namespace

std::uint64_t PyramidSpec::level_size(int level) const {
  return pow2_saturating(static_cast<std::uint64_t>(dim) * level);
}

std::uint64_t PyramidSpec::level_side(int level) const {
  return pow2_saturating(static_cast<std::uint64_t>(level));
}

std::uint64_t PyramidSpec::vertex_count() const {
  return level_offset(levels);
}

std::uint64_t PyramidSpec::level_offset(int level) const {
  std::uint64_t offset = 0;
  for (int l = 0; l < level; ++l) offset = add_saturating(offset, level_size(l));
  return offset;
}

Layout Layout::for_pyramid(const PyramidSpec& spec, GraphKind kind) {
  validate(spec);
  Layout layout;
  layout.kind_ = kind;
  layout.dim_ = spec.dim;
  layout.offsets_.push_back(0);
  for (int l = 0; l < spec.levels; ++l) {
    layout.sides_.push_back(spec.level_side(l));
    layout.offsets_.push_back(
        add_saturating(layout.offsets_.back(), spec.level_size(l)));
  }
  return layout;
}

Layout Layout::for_mesh(std::uint64_t side, int dim) {
  if (side < 1 || dim < 1) {
    throw ArgumentError("mesh needs side >= 1 and d >= 1");
  }
  Layout layout;
  layout.kind_ = GraphKind::kMesh;
  layout.dim_ = dim;
  layout.sides_ = {side};
  layout.offsets_ = {0, mesh_size(side, dim)};
  return layout;
}

std::uint64_t Layout::level_size(int level) const {
  return offsets_.at(level + 1) - offsets_.at(level);
}

VertexId Layout::level_offset(int level) const {
  return static_cast<VertexId>(offsets_.at(level));
}

int Layout::level_of(VertexId v) const {
  if (v >= vertex_count()) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  }
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(),
                                   static_cast<std::uint64_t>(v));
  return static_cast<int>(it - offsets_.begin()) - 1;
}

LevelCoord Layout::coord_of(VertexId v) const {
  const int level = level_of(v);
  return {level, mesh_coords(v - offsets_[level], sides_[level], dim_)};
}

VertexId Layout::vertex_at(const LevelCoord& c) const {
  if (c.level < 0 || c.level >= level_count() ||
      c.coords.size() != static_cast<std::size_t>(dim_)) {
    throw ArgumentError("level coordinate does not fit the layout");
  }
  for (std::uint32_t x : c.coords) {
    if (x >= sides_[c.level]) {
      throw ArgumentError("coordinate out of range for level " +
                          std::to_string(c.level));
    }
  }
  return static_cast<VertexId>(offsets_[c.level] +
                               mesh_index(c.coords, sides_[c.level]));
}

std::optional<PyramidSpec> Layout::pyramid_spec() const {
  if (kind_ == GraphKind::kMesh) return std::nullopt;
  return PyramidSpec{level_count(), dim_};
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::optional<Layout> layout)
    : vertex_count_(vertex_count), layout_(std::move(layout)) {
  for (Edge& e : edges) {
    if (e.first == e.second) {
      throw ArgumentError("self-loop at vertex " + std::to_string(e.first));
    }
    if (e.first >= vertex_count || e.second >= vertex_count) {
      throw ArgumentError("edge endpoint out of range");
    }
    e = canonical_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ArgumentError("duplicate edge");
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(vertex_count_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  adjacency_offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  }
  adjacency_.resize(adjacency_offsets_.back());
  std::vector<std::size_t> fill(adjacency_offsets_.begin(),
                                adjacency_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + adjacency_offsets_[v],
              adjacency_.begin() + adjacency_offsets_[v + 1]);
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return std::span<const VertexId>(adjacency_).subspan(
      adjacency_offsets_.at(v),
      adjacency_offsets_.at(v + 1) - adjacency_offsets_[v]);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<bool> seen(vertex_count_, false);
  std::vector<VertexId> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

Graph build_pyramid(const PyramidSpec& spec, const BuildLimits& limits) {
  return build_pyramid_like(spec, limits, GraphKind::kPyramid);
}

Graph build_multigrid(const PyramidSpec& spec, const BuildLimits& limits) {
  return build_pyramid_like(spec, limits, GraphKind::kMultigrid);
}

Graph build_mesh(std::uint64_t side, int dim, const BuildLimits& limits) {
  Layout layout = Layout::for_mesh(side, dim);
  const std::uint64_t n = mesh_size(side, dim);
  check_size(n, limits);
  std::vector<Edge> edges;
  append_mesh_edges(0, side, dim, edges);
  return Graph(static_cast<std::size_t>(n), std::move(edges),
               std::move(layout));
}

Graph build_path(std::uint64_t n, const BuildLimits& limits) {
  return build_mesh(n, 1, limits);
}

VerticalPathSet vertical_paths(const PyramidSpec& spec,
                               const BuildLimits& limits) {
  validate(spec);
  check_size(spec.vertex_count(), limits);
  const Layout layout = Layout::for_pyramid(spec, GraphKind::kMultigrid);

  VerticalPathSet result;
  for (int l = 0; l + 1 < spec.levels; ++l) {
    const VertexId offset = layout.level_offset(l);
    for (std::uint64_t j = 0; j < spec.level_size(l); ++j) {
      LevelCoord c = layout.coord_of(static_cast<VertexId>(offset + j));
      const bool starts = l == 0 || std::any_of(c.coords.begin(),
                                                c.coords.end(),
                                                [](auto x) { return x & 1U; });
      if (!starts) continue;
      std::vector<VertexId> path;
      path.reserve(spec.levels - l);
      for (int t = l; t < spec.levels; ++t) {
        path.push_back(layout.vertex_at(c));
        ++c.level;
        for (auto& x : c.coords) x *= 2;
      }
      ++result.histogram[spec.levels - 1 - l];
      result.paths.push_back(std::move(path));
    }
  }
  return result;
}

std::uint64_t phi(const PyramidSpec& spec, int k) {
  validate(spec);
  if (k < 1 || k > spec.levels - 1) {
    throw ArgumentError("phi: k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(spec.levels - 1) + "]");
  }
  if (k == spec.levels - 1) return 1;
  return spec.level_size(spec.levels - k - 1) -
         spec.level_size(spec.levels - k - 2);
}

std::vector<std::uint32_t> mesh_coords(std::uint64_t index, std::uint64_t side,
                                       int dim) {
  std::vector<std::uint32_t> coords(dim);
  for (int k = dim - 1; k >= 0; --k) {
    coords[k] = static_cast<std::uint32_t>(index % side);
    index /= side;
  }
  return coords;
}

std::uint64_t mesh_index(std::span<const std::uint32_t> coords,
                         std::uint64_t side) {
  std::uint64_t index = 0;
  for (std::uint32_t x : coords) index = index * side + x;
  return index;
}

}  // namespace pyrt
