#include "pyrt/mesh_router.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

// Replays matchings on vertex positions and returns where each start vertex's
// pebble ended up.
std::vector<VertexId> replay_positions(const Trace& trace, std::size_t n) {
  std::vector<VertexId> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 0U);
  for (const Matching& m : trace.steps()) {
    for (const auto& [u, v] : m.swaps()) std::swap(occupant[u], occupant[v]);
  }
  std::vector<VertexId> final_vertex(n);
  for (VertexId v = 0; v < n; ++v) final_vertex[occupant[v]] = v;
  return final_vertex;
}

void expect_proper_coloring(std::span<const Demand> demands,
                            const std::vector<std::uint32_t>& colors,
                            std::uint32_t degree) {
  ASSERT_EQ(colors.size(), demands.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> left_seen;
  std::set<std::pair<std::uint32_t, std::uint32_t>> right_seen;
  std::vector<std::size_t> class_size(degree, 0);
  for (std::size_t e = 0; e < demands.size(); ++e) {
    ASSERT_LT(colors[e], degree);
    EXPECT_TRUE(left_seen.insert({demands[e].first, colors[e]}).second);
    EXPECT_TRUE(right_seen.insert({demands[e].second, colors[e]}).second);
    ++class_size[colors[e]];
  }
  // Each color class is a perfect matching.
  for (std::size_t size : class_size) EXPECT_EQ(size, demands.size() / degree);
}

TEST(RoutePathTest, Examples) {
  EXPECT_EQ(route_path(5, Permutation::identity(5)).length(), 0u);

  const Trace two = route_path(2, Permutation::reversal(2));
  ASSERT_EQ(two.length(), 1u);
  EXPECT_EQ(two.steps()[0], (Matching{{0, 1}}));

  const Graph p3 = build_path(3);
  const Permutation rev = Permutation::reversal(3);
  const Trace three = route_path(3, rev);
  EXPECT_EQ(three.length(), 3u);
  EXPECT_EQ(validate_trace({p3, rev}, three), 3u);
}

TEST(RoutePathTest, AlternatesEdgeParity) {
  // Step t swaps odd-indexed edges for odd t: on the reversal of P_3 the
  // first swap is (1,2).
  const Trace three = route_path(3, Permutation::reversal(3));
  EXPECT_EQ(three.steps()[0], (Matching{{1, 2}}));
  EXPECT_EQ(three.steps()[1], (Matching{{0, 1}}));
}

TEST(RoutePathTest, ExhaustiveSmallPaths) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Graph path = build_path(n);
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0U);
    do {
      const Permutation pi(images);
      const Trace t = route_path(n, pi);
      ASSERT_EQ(validate_trace({path, pi}, t), t.length());
      ASSERT_LE(t.length(), n);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(DistanceSwapTest, Examples) {
  const Trace t = distance_swap_trace(2, 0, 2);
  ASSERT_EQ(t.length(), 3u);
  EXPECT_EQ(t.steps()[0], (Matching{{0, 1}}));
  EXPECT_EQ(t.steps()[1], (Matching{{1, 2}}));
  EXPECT_EQ(t.steps()[2], (Matching{{0, 1}}));
  EXPECT_EQ(replay_positions(t, 3), (std::vector<VertexId>{2, 1, 0}));

  EXPECT_TRUE(distance_swap_trace(5, 3, 3).empty());

  const Trace u = distance_swap_trace(3, 1, 3);
  ASSERT_EQ(u.length(), 3u);
  EXPECT_EQ(u.steps()[0], (Matching{{1, 2}}));
  EXPECT_EQ(u.steps()[1], (Matching{{2, 3}}));
  EXPECT_EQ(u.steps()[2], (Matching{{1, 2}}));

  EXPECT_THROW(distance_swap_trace(3, 2, 1), ArgumentError);
  EXPECT_THROW(distance_swap_trace(3, 0, 4), ArgumentError);
}

TEST(DistanceSwapTest, ReplayIsTheTransposition) {
  const std::size_t length = 6;
  for (std::size_t a = 0; a <= length; ++a) {
    for (std::size_t b = a; b <= length; ++b) {
      const Trace t = distance_swap_trace(length, a, b);
      EXPECT_EQ(t.length(), a == b ? 0 : 2 * (b - a) - 1);
      std::vector<VertexId> expected(length + 1);
      std::iota(expected.begin(), expected.end(), 0U);
      std::swap(expected[a], expected[b]);
      EXPECT_EQ(replay_positions(t, length + 1), expected) << a << "," << b;
    }
  }
}

TEST(ColorRegularBipartiteTest, Examples) {
  const std::vector<Demand> matching = {{0, 2}, {1, 0}, {2, 1}};
  EXPECT_EQ(color_regular_bipartite(matching, 1),
            (std::vector<std::uint32_t>{0, 0, 0}));

  const std::vector<Demand> k22 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  expect_proper_coloring(k22, color_regular_bipartite(k22, 2), 2);
}

TEST(ColorRegularBipartiteTest, RandomRegularMultigraphs) {
  for (std::uint32_t degree : {2u, 4u, 8u, 16u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      // Union of `degree` random perfect matchings on 8 + 8 vertices: regular
      // with parallel edges likely.
      std::vector<Demand> demands;
      for (std::uint32_t k = 0; k < degree; ++k) {
        const Permutation p = random_permutation(8, seed * 100 + k);
        for (std::uint32_t l = 0; l < 8; ++l) demands.emplace_back(l, p(l));
      }
      expect_proper_coloring(demands, color_regular_bipartite(demands, degree),
                             degree);
    }
  }
}

TEST(ColorRegularBipartiteTest, Errors) {
  const std::vector<Demand> parallel = {{0, 0}, {0, 0}, {1, 1}, {1, 1}};
  expect_proper_coloring(parallel, color_regular_bipartite(parallel, 2), 2);
  const std::vector<Demand> lopsided = {{0, 0}, {0, 0}, {0, 1}, {1, 1}};
  EXPECT_THROW(color_regular_bipartite(lopsided, 2), ArgumentError);

  std::vector<Demand> cubic;
  for (std::uint32_t k = 0; k < 3; ++k) {
    for (std::uint32_t l = 0; l < 4; ++l) cubic.emplace_back(l, (l + k) % 4);
  }
  EXPECT_THROW(color_regular_bipartite(cubic, 3), UnsupportedDegreeError);
}

TEST(RouteMeshTest, Examples) {
  EXPECT_EQ(route_mesh(4, 3, Permutation::identity(64)).length(), 0u);

  // Rotation around the 4-cycle 0-1-3-2.
  const Graph square = build_mesh(2, 2);
  const Permutation rotation({1, 3, 0, 2});
  const Trace r = route_mesh(2, 2, rotation);
  EXPECT_LE(validate_trace({square, rotation}, r), 6u);

  const Graph grid = build_mesh(4, 2);
  const Permutation pi = random_permutation(16, 7);
  const Trace t = route_mesh(4, 2, pi);
  EXPECT_EQ(validate_trace({grid, pi}, t), 11u);
  EXPECT_LE(t.length(), mesh_step_bound(4, 2));
}

TEST(RouteMeshTest, ExhaustiveTwoByTwo) {
  const Graph square = build_mesh(2, 2);
  std::vector<std::uint32_t> images = {0, 1, 2, 3};
  int count = 0;
  do {
    const Permutation pi(images);
    const Trace t = route_mesh(2, 2, pi);
    ASSERT_EQ(validate_trace({square, pi}, t), t.length());
    ASSERT_LE(t.length(), 6u);
    ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  EXPECT_EQ(count, 24);
}

TEST(RouteMeshTest, RandomSoundnessAndBound) {
  for (int dim = 1; dim <= 3; ++dim) {
    for (std::uint64_t side : {1u, 2u, 4u, 8u, 16u}) {
      const Graph mesh = build_mesh(side, dim);
      if (mesh.vertex_count() > 4096) continue;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Permutation pi = random_permutation(mesh.vertex_count(), seed);
        const Trace t = route_mesh(side, dim, pi);
        ASSERT_EQ(validate_trace({mesh, pi}, t), t.length());
        ASSERT_LE(t.length(), mesh_step_bound(side, dim))
            << "side=" << side << " d=" << dim;
      }
    }
  }
}

TEST(RouteMeshTest, PhaseOneSlotsSeparateDestinationLines) {
  for (int dim = 2; dim <= 3; ++dim) {
    for (std::uint64_t side : {2u, 4u, 8u}) {
      std::uint64_t n = 1;
      for (int k = 0; k < dim; ++k) n *= side;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Permutation dest = random_permutation(n, seed);
        const auto slot = mesh_phase_slots(side, dim, dest);
        // Within a line every slot is used once; within a cross-section every
        // destination line appears once.
        std::set<std::pair<std::uint64_t, std::uint32_t>> line_slot;
        std::set<std::pair<std::uint32_t, std::uint64_t>> slot_dest_line;
        for (std::uint32_t p = 0; p < n; ++p) {
          EXPECT_TRUE(line_slot.insert({p / side, slot[p]}).second);
          EXPECT_TRUE(slot_dest_line.insert({slot[p], dest(p) / side}).second);
        }
      }
    }
  }
}

TEST(RouteMeshTest, RejectsNonPowerOfTwoSide) {
  EXPECT_THROW(route_mesh(3, 2, Permutation::identity(9)), ArgumentError);
  EXPECT_THROW(route_mesh(4, 2, Permutation::identity(15)), ArgumentError);
}

TEST(RouteGridTest, EmbeddedVerticesAreUsed) {
  // A 2x2 grid living on vertices 10..13 of a larger id space.
  const std::vector<VertexId> vertices = {10, 11, 12, 13};
  const Trace t = route_grid(vertices, 2, 2, Permutation({3, 2, 1, 0}));
  for (const Matching& m : t.steps()) {
    for (const auto& [u, v] : m.swaps()) {
      EXPECT_GE(u, 10u);
      EXPECT_LE(v, 13u);
    }
  }
}

}  // namespace
}  // namespace pyrt
