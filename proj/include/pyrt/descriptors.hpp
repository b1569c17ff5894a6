#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "pyrt/permutation.hpp"
#include "pyrt/topology.hpp"

namespace pyrt {

// Parsed graph spec string:
//   pyramid:m=<int>,d=<int>   multigrid:m=<int>,d=<int>
//   mesh:side=<int>,d=<int>   path:n=<int>  (also path:<int>)
struct GraphSpec {
  enum class Family { kPyramid, kMultigrid, kMesh, kPath };

  Family family = Family::kPath;
  PyramidSpec pyramid;     // pyramid, multigrid
  std::uint64_t side = 1;  // mesh side, or path length
  int dim = 1;

  std::string to_string() const;
  std::uint64_t vertex_count() const;
  Graph build(const BuildLimits& limits = {}) const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

GraphSpec parse_graph_spec(std::string_view text);

// Permutation descriptors over n points:
//   id | rev | seed:<u64> | cycles:(a b c)(d e) | array:[2,0,1]
Permutation parse_permutation(std::string_view text, std::size_t n);

}  // namespace pyrt
