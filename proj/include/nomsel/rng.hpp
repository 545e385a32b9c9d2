#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nomsel {

// splitmix64 (Sebastiano Vigna, 2015; public domain). The only source of
// randomness in the project: ten lines, no libc or platform dependence, so
// seeded runs reproduce bit-for-bit across machines and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n): reject the top 2^64 mod n values.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r = next();
    while (r < threshold) r = next();
    return r % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Counter-based sub-stream seed, one splitmix64 step over an offset state.
// Hands independent generators to forest trees and CV folds so they can be
// processed in any order with identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return SplitMix64(master ^ (0x9e3779b97f4a7c15ull * (stream + 1))).next();
}

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace nomsel
