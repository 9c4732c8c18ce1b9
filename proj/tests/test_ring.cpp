#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "tetrabox/random.hpp"
#include "tetrabox/ring.hpp"

namespace tetrabox {
namespace {

const RingElem t = RingElem::t();
const RingElem one(1);

TEST(Ring, EvaluationIsARingHomomorphism) {
  RandomSource rng(21);
  for (int k = 0; k < 60; ++k) {
    const RingElem a = rng.ring();
    const RingElem b = rng.ring();
    for (const Rational& r : oracle::points()) {
      EXPECT_EQ((a + b).eval(r), a.eval(r) + b.eval(r));
      EXPECT_EQ((a * b).eval(r), a.eval(r) * b.eval(r));
      EXPECT_EQ((-a).eval(r), -a.eval(r));
    }
  }
}

TEST(Ring, NormalFormCancelsAgainstDenominator) {
  const RingElem a = (t - one) * t * RingElem::t_inv() * RingElem::tm1_inv();
  EXPECT_EQ(a, one);
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ((t * RingElem::t_inv().pow(3)).str(), "1/t^2");
}

TEST(Ring, PrimeIsTheSubstitution) {
  RandomSource rng(22);
  for (int k = 0; k < 40; ++k) {
    const RingElem a = rng.ring();
    for (const Rational& r : oracle::points()) {
      EXPECT_EQ(ring_prime(a).eval(r), a.eval(oracle::prime_point(r)));
    }
    EXPECT_EQ(ring_prime(a, 3), a);
    EXPECT_EQ(ring_prime(ring_prime(a)), ring_prime(a, 2));
    const RingElem b = rng.ring();
    EXPECT_EQ(ring_prime(a * b), ring_prime(a) * ring_prime(b));
  }
  // t' = 1 - 1/t and t'' = 1/(1 - t).
  EXPECT_EQ(ring_prime(t), one - RingElem::t_inv());
  EXPECT_EQ(ring_prime(t, 2), -RingElem::tm1_inv());
}

TEST(Ring, UnitsAreMonomialsInTAndTMinusOne) {
  const RingElem u = RingElem(3) * t.pow(2) * RingElem::tm1_inv();
  ASSERT_TRUE(u.is_unit());
  EXPECT_EQ(*u.inverse() * u, one);
  EXPECT_TRUE((t - one).is_unit());
  EXPECT_EQ(t.pow(-2), RingElem::t_inv().pow(2));
  EXPECT_FALSE((t + one).is_unit());
  EXPECT_FALSE((t * t - RingElem(4)).is_unit());
  EXPECT_FALSE(RingElem(0).is_unit());
  EXPECT_THROW(static_cast<void>((t + one).pow(-1)), std::domain_error);
}

TEST(Ring, CanonicalExpansionMatchesPointwise) {
  RandomSource rng(23);
  for (int k = 0; k < 40; ++k) {
    const RingElem a = rng.ring();
    const CanonExpansion e = canon_expand(a);
    EXPECT_EQ(reassemble(e), a);
    for (const Rational& r : oracle::points()) {
      const Rational tp = oracle::prime_point(r);
      const Rational tpp = oracle::prime_point(tp);
      Rational sum = e.c0;
      for (const auto& [i, c] : e.t_part) sum += c * r.pow(i);
      for (const auto& [i, c] : e.tp_part) sum += c * tp.pow(i);
      for (const auto& [i, c] : e.tpp_part) sum += c * tpp.pow(i);
      EXPECT_EQ(sum, a.eval(r));
    }
  }
}

TEST(Ring, CanonicalExpansionOfOneOverTSquaredTMinusOne) {
  // Hand expansion: 1/(t^2 (t-1)) = -2 + 3 t' - t'^2 - t''.
  const CanonExpansion e = canon_expand(RingElem::t_inv().pow(2) * RingElem::tm1_inv());
  EXPECT_EQ(e.c0, Rational(-2));
  EXPECT_TRUE(e.t_part.empty());
  EXPECT_EQ(e.tp_part, (std::map<unsigned, Rational>{{1, Rational(3)}, {2, Rational(-1)}}));
  EXPECT_EQ(e.tpp_part, (std::map<unsigned, Rational>{{1, Rational(-1)}}));
}

TEST(Ring, FrameSplitsAreDirect) {
  RandomSource rng(24);
  for (int k = 0; k < 40; ++k) {
    const RingElem a = rng.ring();
    for (int frame = 0; frame < 3; ++frame) {
      const auto parts = split_frame(a, frame);
      EXPECT_EQ(parts[0] + parts[1] + parts[2], a);
      for (int slot = 0; slot < 3; ++slot) {
        const auto [level, shape] = frame_component_subspace(frame, slot);
        EXPECT_TRUE(in_poly_subspace(parts.at(slot), level, shape));
      }
    }
  }
  // 1 - t' = 1/t lies in (1 - t')F[t'] but not in t'F[t'].
  EXPECT_TRUE(in_poly_subspace(RingElem::t_inv(), 1, PolyShape::VanishAtOne));
  EXPECT_FALSE(in_poly_subspace(RingElem::t_inv(), 1, PolyShape::VanishAtZero));
  EXPECT_FALSE(in_poly_subspace(RingElem::t_inv(), 0, PolyShape::Full));
}

TEST(Ring, Rendering) {
  EXPECT_EQ((RingElem(2) * t - one).str(), "2*t - 1");
  EXPECT_EQ((one - t * t).str(), "-t^2 + 1");
  EXPECT_EQ(RingElem::t_inv().str(), "1/t");
  EXPECT_EQ((RingElem(Rational(1, 4)) * RingElem::t_inv() * RingElem::tm1_inv().pow(2)).str(),
            "(1/4)/(t*(t - 1)^2)");
  EXPECT_EQ(RingElem(0).str(), "0");
}

}  // namespace
}  // namespace tetrabox
