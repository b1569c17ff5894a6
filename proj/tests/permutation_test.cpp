#include "pyrt/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "pyrt/error.hpp"

namespace pyrt {
namespace {

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), ArgumentError);
  EXPECT_THROW(Permutation({0, 3, 1}), ArgumentError);
  EXPECT_NO_THROW(Permutation(std::vector<std::uint32_t>{}));
}

TEST(ComposeTest, RightArgumentAppliesFirst) {
  const Permutation f({1, 2, 0});
  const Permutation g({0, 2, 1});
  EXPECT_EQ(compose(f, Permutation::identity(3)), f);
  // compose(f, g)(1) = f(g(1)) = f(2) = 0
  EXPECT_EQ(compose(f, g)(1), 0u);
  EXPECT_THROW(compose(f, Permutation::identity(4)), ArgumentError);
}

TEST(CyclesTest, Examples) {
  EXPECT_EQ(cycles(Permutation::reversal(4)),
            (std::vector<Cycle>{{0, 3}, {1, 2}}));
  EXPECT_EQ(cycles(Permutation::reversal(3)),
            (std::vector<Cycle>{{0, 2}, {1}}));
  // (0 4 2)(1 3): starts at minima, sorted.
  EXPECT_EQ(cycles(Permutation({4, 3, 0, 1, 2})),
            (std::vector<Cycle>{{0, 4, 2}, {1, 3}}));
}

TEST(InvertTest, ThreeCycle) {
  const Permutation rot({1, 2, 0});  // (0 1 2)
  const Permutation inv = invert(rot);
  EXPECT_EQ(inv, Permutation({2, 0, 1}));  // (0 2 1)
  EXPECT_TRUE(compose(inv, rot).is_identity());
}

TEST(DecomposeInvolutionsTest, Examples) {
  const auto [a, b] = decompose_involutions(Permutation::identity(5));
  EXPECT_TRUE(a.is_identity());
  EXPECT_TRUE(b.is_identity());

  const auto [s1, s2] = decompose_involutions(Permutation({1, 0}));
  EXPECT_TRUE(s1.is_identity());
  EXPECT_EQ(s2, Permutation({1, 0}));

  const Permutation rot({1, 2, 0});
  const auto [t1, t2] = decompose_involutions(rot);
  EXPECT_EQ(t1, Permutation({0, 2, 1}));  // (1 2)
  EXPECT_EQ(t2, Permutation({1, 0, 2}));  // (0 1)
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(t2(t1(x)), rot(x));
}

TEST(DecomposeInvolutionsTest, RandomPermutationsFactorExactly) {
  SplitMix64 sizes(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + sizes.below(63);
    const Permutation pi = random_permutation(n, 1000 + trial);
    const auto [first, second] = decompose_involutions(pi);
    ASSERT_TRUE(compose(first, first).is_identity());
    ASSERT_TRUE(compose(second, second).is_identity());
    ASSERT_EQ(compose(second, first), pi) << "n=" << n << " trial=" << trial;
  }
}

TEST(PermutationProperties, CyclesAndInverse) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Permutation f = random_permutation(1 + seed % 40, seed);
    const auto cs = cycles(f);
    std::vector<bool> covered(f.size(), false);
    for (const Cycle& c : cs) {
      EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
      for (auto x : c) {
        EXPECT_FALSE(covered[x]);
        covered[x] = true;
      }
    }
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    EXPECT_EQ(from_cycles(f.size(), cs), f);
    EXPECT_TRUE(compose(invert(f), f).is_identity());
  }
}

TEST(RandomPermutationTest, Deterministic) {
  EXPECT_EQ(random_permutation(0, 99).size(), 0u);
  EXPECT_EQ(random_permutation(50, 3), random_permutation(50, 3));
  EXPECT_NE(random_permutation(50, 3), random_permutation(50, 4));
}

TEST(RandomPermutationTest, GoldenValues) {
  // Cross-checked against an independent SplitMix64 + Fisher-Yates script.
  EXPECT_EQ(random_permutation(5, 42), Permutation({1, 2, 0, 4, 3}));
  EXPECT_EQ(random_permutation(7, 11), Permutation({5, 3, 2, 0, 4, 6, 1}));
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
}

TEST(RandomPermutationTest, RoughlyUniformOnThreePoints) {
  std::map<std::vector<std::uint32_t>, int> counts;
  for (std::uint64_t seed = 0; seed < 6000; ++seed) {
    const Permutation p = random_permutation(3, seed);
    ++counts[{p.images().begin(), p.images().end()}];
  }
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [perm, count] : counts) {
    EXPECT_GT(count, 850);
    EXPECT_LT(count, 1150);
  }
}

}  // namespace
}  // namespace pyrt
