#pragma once

#include <cstdint>
#include <random>

#include "cartankit/field.hpp"

namespace cartankit {

/// Seeded generator with a platform-independent mapping to integers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<long>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long max_num, long max_den) {
    Rational r(uniform(-max_num, max_num), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  /// Nonzero p/q with 1 <= p <= max_num, 1 <= q <= max_den.
  Rational positive(long max_num, long max_den) {
    Rational r(uniform(1, max_num), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cartankit
