#pragma once

#include <cstdint>
#include <random>

#include "tetrabox/loop.hpp"
#include "tetrabox/onsager.hpp"

namespace tetrabox {

/// Deterministic generator of bounded-complexity test elements.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| <= 5, 1 <= q <= 3.
  Rational rational();
  /// num/(t^a (t-1)^b) with deg num <= max_degree, a <= max_a, b <= max_b.
  RingElem ring(int max_degree = 6, unsigned max_a = 3, unsigned max_b = 3);
  LoopElem loop(int max_degree = 6, unsigned max_a = 3, unsigned max_b = 3);
  /// Up to `terms` random entries with indices <= max_index.
  Coords coords(Basis basis, int prime_level, long max_index, int terms = 4);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tetrabox
