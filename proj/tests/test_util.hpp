#pragma once

#include <cstdint>

#include "bigm1/rational.hpp"

namespace bigm1::testing {

// Small deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 20, long max_den = 10) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

 private:
  uint64_t state_;
};

}  // namespace bigm1::testing
