#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace skyplace {

// Seeded random stream with a fixed draw algorithm, so a (seed, call
// sequence) pair produces the same values on every platform. All
// distributions are derived from the raw 64-bit output here instead of
// <random> distribution objects, whose sequences are implementation
// defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  // Uniform integer in [0, n). n must be >= 1.
  std::size_t pick_index(std::size_t n) {
    std::size_t i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

namespace detail {

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Derives an independent named stream from a master seed. Streams for
// different (name, index) pairs are decorrelated, so enabling one
// consumer does not perturb the draws seen by another.
inline Rng derived_stream(std::uint64_t master_seed, std::string_view name,
                          std::uint64_t index = 0) {
  std::uint64_t s = detail::splitmix64(master_seed ^ detail::fnv1a(name));
  s = detail::splitmix64(s ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return Rng(s);
}

}  // namespace skyplace
