#pragma once

#include <cstdint>

#include "qkzlab/rational.hpp"

namespace qkzlab {

/// 64-bit linear congruential generator, x <- a x + c mod 2^64 with
/// a = 6364136223846793005, c = 1442695040888963407. Output is the high 32
/// bits of the state. Identical seeds give identical streams everywhere.
class Lcg {
 public:
  static constexpr std::uint64_t kMul = 6364136223846793005ULL;
  static constexpr std::uint64_t kInc = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed = 0) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * kMul + kInc;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform integer in [lo, hi] (modulo reduction; bias is irrelevant here).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rat rational(long bound = 1000) { return Rat(uniform(-bound, bound), uniform(1, bound)); }

  /// As rational(), excluding zero.
  Rat nonzero_rational(long bound = 1000) {
    for (;;) {
      Rat r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace qkzlab
