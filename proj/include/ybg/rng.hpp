#pragma once

#include <cstdint>
#include <random>

#include "ybg/scalar.hpp"

namespace ybg {

// Seed-deterministic random draws. mt19937_64 output is specified by the
// standard, and the distributions below are hand-rolled, so identical seeds
// give identical draws on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  int bit() { return static_cast<int>(next() & 1u); }

  // Uniform on [lo, hi] by rejection.
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<long>(v % span);
  }

  // Nonzero rational with numerator in [-max_num, max_num] and denominator
  // in [1, max_den].
  Rational nonzero_rational(long max_num = 9, long max_den = 3) {
    long num = 0;
    while (num == 0) num = uniform(-max_num, max_num);
    return Rational(num, uniform(1, max_den));
  }

  Scalar nonzero_scalar(long max_num = 9, long max_den = 3) {
    return Scalar(nonzero_rational(max_num, max_den));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace ybg
