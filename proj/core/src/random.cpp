#include "tetrabox/random.hpp"

#include <vector>

namespace tetrabox {

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rational RandomSource::rational() { return {integer(-5, 5), integer(1, 3)}; }

RingElem RandomSource::ring(int max_degree, unsigned max_a, unsigned max_b) {
  const long degree = integer(0, max_degree);
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree) + 1);
  for (long k = 0; k <= degree; ++k) {
    coeffs.push_back(rational());
  }
  const auto a = static_cast<unsigned>(integer(0, max_a));
  const auto b = static_cast<unsigned>(integer(0, max_b));
  return {Poly(std::move(coeffs)), a, b};
}

LoopElem RandomSource::loop(int max_degree, unsigned max_a, unsigned max_b) {
  LoopElem f{ring(max_degree, max_a, max_b), {}, {}};
  f.g = ring(max_degree, max_a, max_b);
  f.h = ring(max_degree, max_a, max_b);
  return f;
}

Coords RandomSource::coords(Basis basis, int prime_level, long max_index, int terms) {
  Coords out(basis, prime_level);
  const auto slots = basis_slots(basis);
  for (int k = 0; k < terms; ++k) {
    out.add(slots.at(static_cast<std::size_t>(integer(0, 2))), integer(0, max_index), rational());
  }
  return out;
}

}  // namespace tetrabox
