#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace orl {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seeded random stream. Sub-streams are split deterministically by a tag so that
/// subsystems (regular-graph pairing, embedding sampling, ...) never share state.
///
/// Only raw engine output is used; std distributions are avoided so that results do
/// not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::string_view tag) const {
    std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
    for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ull;
    return Rng(splitmix64(seed_ ^ h));
  }
  Rng split(std::uint64_t index) const { return Rng(splitmix64(seed_ + 0x632BE59BD9B4E019ull * (index + 1))); }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  /// True with probability exactly 2^-k (k <= 63).
  bool coin_pow2(unsigned k) { return k == 0 || (engine_() >> (64 - k)) == 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace orl
