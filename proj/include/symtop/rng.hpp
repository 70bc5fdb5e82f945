#pragma once

#include <cstdint>

#include "rational.hpp"

namespace symtop {

/// SplitMix64. Fully specified sequence, so seeded constructions are
/// reproducible across platforms and standard-library versions.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Rational offset p/q with |p| <= denom_bound and 1 <= q <= denom_bound.
  Rational offset(int64_t denom_bound) {
    int64_t q = range(1, denom_bound);
    int64_t p = range(-denom_bound, denom_bound);
    return Rational(p, q);
  }
};

}  // namespace symtop
