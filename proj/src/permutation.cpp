#include "pyrt/permutation.hpp"

#include <numeric>
#include <string>

#include "pyrt/error.hpp"

namespace pyrt {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw ArgumentError("not a permutation: image " + std::to_string(y) +
                          (y >= images_.size() ? " out of range" : " repeated"));
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<std::uint32_t>(n - 1 - i);
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw ArgumentError("compose: size mismatch " + std::to_string(f.size()) +
                        " vs " + std::to_string(g.size()));
  }
  std::vector<std::uint32_t> images(f.size());
  for (std::uint32_t x = 0; x < images.size(); ++x) images[x] = f(g(x));
  return Permutation(std::move(images));
}

Permutation invert(const Permutation& f) {
  std::vector<std::uint32_t> images(f.size());
  for (std::uint32_t x = 0; x < images.size(); ++x) images[f(x)] = x;
  return Permutation(std::move(images));
}

std::vector<Cycle> cycles(const Permutation& f) {
  std::vector<Cycle> result;
  std::vector<bool> seen(f.size(), false);
  for (std::uint32_t start = 0; start < f.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (std::uint32_t x = start; !seen[x]; x = f(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    result.push_back(std::move(c));
  }
  return result;
}

Permutation from_cycles(std::size_t n, std::span<const Cycle> cs) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  std::vector<bool> used(n, false);
  for (const Cycle& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) {
        throw ArgumentError("cycles are not disjoint or exceed size " +
                            std::to_string(n));
      }
      used[c[i]] = true;
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

std::pair<Permutation, Permutation> decompose_involutions(
    const Permutation& pi) {
  std::vector<std::uint32_t> first(pi.size());
  std::vector<std::uint32_t> second(pi.size());
  for (const Cycle& c : cycles(pi)) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      first[c[i]] = c[(k - i) % k];
      second[c[i]] = c[(k + 1 - i) % k];
    }
  }
  return {Permutation(std::move(first)), Permutation(std::move(second))};
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // 2^64 mod bound values at the bottom of the range would bias the modulus.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  Permutation p = Permutation::identity(n);
  std::vector<std::uint32_t> images(p.images().begin(), p.images().end());
  SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images));
}

}  // namespace pyrt
