#include "pyrt/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pyrt/error.hpp"
#include "pyrt/mesh_router.hpp"
#include "pyrt/pyramid_router.hpp"

namespace pyrt {
namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(AllMatchingsTest, Examples) {
  EXPECT_EQ(all_matchings(build_path(2)), (std::vector<Matching>{Matching{{0, 1}}}));
  EXPECT_EQ(all_matchings(build_path(3)),
            (std::vector<Matching>{Matching{{0, 1}}, Matching{{1, 2}}}));
  EXPECT_EQ(all_matchings(triangle()).size(), 3u);
  EXPECT_TRUE(all_matchings(build_path(1)).empty());
  // P_4: {01}, {01,23}, {12}, {23}.
  EXPECT_EQ(all_matchings(build_path(4)).size(), 4u);
}

TEST(AllMatchingsTest, CountsMatchFibonacciOnPaths) {
  // Matchings of P_n (including the empty one) number F(n+1).
  std::size_t a = 1, b = 1;
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(all_matchings(build_path(n)).size() + 1, b) << n;
    const std::size_t c = a + b;
    a = b;
    b = c;
  }
}

TEST(ExactRtTest, Anchors) {
  const Graph p2 = build_path(2);
  const Graph p3 = build_path(3);
  const Permutation swap({1, 0});
  const Permutation rev = Permutation::reversal(3);
  EXPECT_EQ(exact_rt({p2, swap}), 1u);
  EXPECT_EQ(exact_rt({p3, rev}), 3u);
  EXPECT_EQ(exact_rt({p3, Permutation::identity(3)}), 0u);
  EXPECT_EQ(exact_rt({triangle(), Permutation({1, 2, 0})}), 2u);
  EXPECT_EQ(route_path(3, rev).length(), exact_rt({p3, rev}));
}

TEST(ExactRtTest, ForwardSearchAgreesWithTable) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Graph path = build_path(n);
    const auto table = routing_time_table(path);
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0U);
    do {
      const Permutation pi(images);
      EXPECT_EQ(exact_rt({path, pi}), table[permutation_rank(images)]);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(ExactRtTest, InverseNeedsTheSameTime) {
  const Graph mesh = build_mesh(2, 2);
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const Permutation pi = random_permutation(4, seed);
    EXPECT_EQ(exact_rt({mesh, pi}), exact_rt({mesh, invert(pi)}));
  }
  const Graph g = build_multigrid(PyramidSpec{3, 1});
  const auto table = routing_time_table(g);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Permutation pi = random_permutation(7, seed);
    const Permutation inv = invert(pi);
    EXPECT_EQ(table[permutation_rank(pi.images())],
              table[permutation_rank(inv.images())]);
  }
}

TEST(ExactRoutingNumberTest, Anchors) {
  EXPECT_EQ(exact_routing_number(build_path(1)), 0u);
  EXPECT_EQ(exact_routing_number(build_path(2)), 1u);
  EXPECT_EQ(exact_routing_number(build_path(3)), 3u);
  // Pyramid edges can only help.
  EXPECT_LE(exact_routing_number(build_pyramid(PyramidSpec{3, 1})),
            exact_routing_number(build_multigrid(PyramidSpec{3, 1})));
}

TEST(ExactRoutingNumberTest, OddEvenNeverBeatsTheOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Graph path = build_path(n);
    const auto table = routing_time_table(path);
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0U);
    do {
      const Permutation pi(images);
      ASSERT_GE(route_path(n, pi).length(), table[permutation_rank(images)]);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(OracleTest, LimitsAndErrors) {
  EXPECT_THROW(all_matchings(build_path(11)), ResourceError);
  EXPECT_THROW(exact_rt({build_path(9), Permutation::identity(9)}), ResourceError);
  EXPECT_THROW(exact_routing_number(build_path(8)), ResourceError);
  OracleLimits wide;
  wide.max_enumeration_vertices = 8;
  EXPECT_EQ(exact_routing_number(build_path(8), wide), 8u);

  const Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(exact_rt({split, Permutation({2, 1, 0, 3})}), ArgumentError);
  EXPECT_THROW(routing_time_table(split), ArgumentError);
}

TEST(PermutationRankTest, RoundTrip) {
  EXPECT_EQ(permutation_rank(std::vector<std::uint32_t>{0, 1, 2}), 0u);
  EXPECT_EQ(permutation_rank(std::vector<std::uint32_t>{2, 1, 0}), 5u);
  std::vector<std::uint32_t> images(5);
  std::iota(images.begin(), images.end(), 0U);
  std::uint64_t expected = 0;
  do {
    EXPECT_EQ(permutation_rank(images), expected);
    std::vector<std::uint32_t> back(5);
    permutation_unrank(expected, back);
    EXPECT_EQ(back, images);
    ++expected;
  } while (std::next_permutation(images.begin(), images.end()));
  EXPECT_EQ(expected, 120u);
}

}  // namespace
}  // namespace pyrt
