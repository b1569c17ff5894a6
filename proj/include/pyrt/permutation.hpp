#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pyrt {

// A bijection on [0, n). `p(x)` is the image of x.
class Permutation {
 public:
  Permutation() = default;
  // Throws ArgumentError unless `images` is a bijection on [0, size).
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  static Permutation reversal(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  // All cycles of length at most two.
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

using Cycle = std::vector<std::uint32_t>;

// compose(f, g)(x) = f(g(x)): the right argument is applied first.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation invert(const Permutation& f);

// Disjoint cycles covering [0, n), fixed points included. Each cycle starts
// at its minimum element and lists c, f(c), f(f(c)), ...; cycles are sorted
// by their first element.
std::vector<Cycle> cycles(const Permutation& f);
// Builds a permutation of size n from disjoint cycles; unlisted points are
// fixed.
Permutation from_cycles(std::size_t n, std::span<const Cycle> cs);

// Splits pi into involutions (first, second) with compose(second, first) ==
// pi. For each cycle (c_0 ... c_{k-1}) of pi, first maps c_i to c_{-i mod k}
// and second maps c_i to c_{1-i mod k}.
std::pair<Permutation, Permutation> decompose_involutions(
    const Permutation& pi);

// SplitMix64 (Steele, Lea & Flood). The constants are part of the
// reproducibility contract of random_permutation and the benchmark:
//   state += 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// The SplitMix64 output function applied to a single value.
std::uint64_t mix64(std::uint64_t z);

// Fisher-Yates from the top index down: for i = n-1 .. 1, swap i with
// below(i + 1). Identical (n, seed) gives identical output everywhere.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace pyrt
