#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "veld/rational.hpp"

namespace veld {

// Deterministic generator with hand-rolled distributions so that identical
// seeds give identical streams on every platform (std:: distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire's unbiased multiply-shift rejection.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    std::uint64_t l = static_cast<std::uint64_t>(m);
    if (l < n) {
      std::uint64_t t = -n % n;
      while (l < t) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        l = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  long range(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

  double gauss() {
    // Box-Muller; fixed formula, no cached second value.
    double u1 = real01(), u2 = real01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform dyadic rational k / 2^denpow in [lo, hi).
  Rat dyadic(const Rat& lo, const Rat& hi, long denpow) {
    Rat step = pow2(-denpow);
    Rat span = (hi - lo) / step;
    long n = static_cast<long>(to_double(span));
    if (n < 1) n = 1;
    return lo + step * rat(range(0, n - 1));
  }

  Rng split() { return Rng(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace veld
