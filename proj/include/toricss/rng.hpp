#pragma once

#include <cstdint>

#include "toricss/gf.hpp"

namespace toricss {

// Counter-based generator: output i is splitmix64(seed, i). Two generators
// with the same seed produce the same stream on every platform, which
// std::uniform_int_distribution does not guarantee.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed ^ (stream * 0xD1B54A32D192ED03ull)) {}

  std::uint64_t next() {
    std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound) by rejection, bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  gf::Element element(const gf::GaloisField& field) { return static_cast<gf::Element>(below(field.q())); }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace toricss
