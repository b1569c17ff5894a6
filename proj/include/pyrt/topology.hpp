#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pyrt/types.hpp"

namespace pyrt {

struct BuildLimits {
  std::uint64_t max_vertices = std::uint64_t{1} << 22;
};

// A d-dimensional pyramid with m levels. Level l is a d-dimensional mesh of
// side 2^l; the apex is level 0.
struct PyramidSpec {
  int levels = 1;
  int dim = 1;

  // n_l = 2^(d*l). Saturates at UINT64_MAX.
  std::uint64_t level_size(int level) const;
  std::uint64_t level_side(int level) const;
  // N = (2^(md) - 1) / (2^d - 1). Saturates at UINT64_MAX.
  std::uint64_t vertex_count() const;
  // Id of the first vertex on `level`; vertices are level-major.
  std::uint64_t level_offset(int level) const;

  friend bool operator==(const PyramidSpec&, const PyramidSpec&) = default;
};

struct LevelCoord {
  int level = 0;
  std::vector<std::uint32_t> coords;

  friend bool operator==(const LevelCoord&, const LevelCoord&) = default;
};

enum class GraphKind { kPyramid, kMultigrid, kMesh };

// Vertex addressing shared by pyramids, multi-grids and meshes. A mesh is a
// single level; within a level, labels are row-major with the last
// coordinate varying fastest.
class Layout {
 public:
  static Layout for_pyramid(const PyramidSpec& spec, GraphKind kind);
  static Layout for_mesh(std::uint64_t side, int dim);

  GraphKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int level_count() const { return static_cast<int>(sides_.size()); }
  std::uint64_t level_side(int level) const { return sides_.at(level); }
  std::uint64_t level_size(int level) const;
  VertexId level_offset(int level) const;
  std::size_t vertex_count() const { return offsets_.back(); }

  int level_of(VertexId v) const;
  LevelCoord coord_of(VertexId v) const;
  VertexId vertex_at(const LevelCoord& c) const;

  // Set for pyramid and multi-grid layouts.
  std::optional<PyramidSpec> pyramid_spec() const;

 private:
  Layout() = default;

  GraphKind kind_ = GraphKind::kMesh;
  int dim_ = 1;
  std::vector<std::uint64_t> sides_;
  std::vector<std::uint64_t> offsets_;
};

// Undirected simple graph with sorted adjacency (CSR). Immutable.
class Graph {
 public:
  // Edges may be given in either orientation; self-loops, duplicates and
  // out-of-range endpoints are rejected with ArgumentError.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::optional<Layout> layout = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  bool is_connected() const;
  const std::optional<Layout>& layout() const { return layout_; }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<VertexId> adjacency_;
  std::optional<Layout> layout_;
};

struct VerticalPathSet {
  // Each path lists vertex ids from its top (lowest level number) down to
  // the bottom level. Sorted by starting vertex id.
  std::vector<std::vector<VertexId>> paths;
  // length k -> number of maximal paths of length k (phi_k).
  std::map<int, std::uint64_t> histogram;
};

Graph build_pyramid(const PyramidSpec& spec, const BuildLimits& limits = {});

// Spanning subgraph of the pyramid that keeps only the edge from each vertex
// (l, c) to its all-even child (l + 1, 2c).
Graph build_multigrid(const PyramidSpec& spec, const BuildLimits& limits = {});

Graph build_mesh(std::uint64_t side, int dim, const BuildLimits& limits = {});
Graph build_path(std::uint64_t n, const BuildLimits& limits = {});

// Maximal chains of multi-grid vertical edges. A chain starts at the apex or
// at any vertex with an odd coordinate, and runs to the bottom level.
VerticalPathSet vertical_paths(const PyramidSpec& spec,
                               const BuildLimits& limits = {});

// Closed-form count of maximal vertical paths of length k, k in [1, m-1].
std::uint64_t phi(const PyramidSpec& spec, int k);

// Row-major helpers for a mesh of the given side.
std::vector<std::uint32_t> mesh_coords(std::uint64_t index, std::uint64_t side,
                                       int dim);
std::uint64_t mesh_index(std::span<const std::uint32_t> coords,
                         std::uint64_t side);

}  // namespace pyrt
