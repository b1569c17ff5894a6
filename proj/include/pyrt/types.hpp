#pragma once

#include <cstdint>
#include <utility>

namespace pyrt {

using VertexId = std::uint32_t;

// Undirected edge; stored canonically with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge canonical_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace pyrt
