#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "tetrabox/expr.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/random.hpp"

namespace tetrabox {
namespace {

const RingElem t = RingElem::t();
const RingElem one(1);

LoopElem loop(std::string_view s) { return std::get<LoopElem>(evaluate(s)); }
RingElem ring(std::string_view s) { return std::get<RingElem>(evaluate(s)); }

template <typename E>
std::size_t error_position(std::string_view s) {
  try {
    static_cast<void>(evaluate(s));
  } catch (const E& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << s;
  return 0;
}

TEST(Expr, LinearCombination) {
  EXPECT_EQ(loop("x*(2*t-1) + y*t"), (LoopElem{RingElem(2) * t - one, t, {}}));
  EXPECT_EQ(loop("x⊗(2*t - 1) + y⊗(t) + z⊗(0)"), (LoopElem{RingElem(2) * t - one, t, {}}));
  EXPECT_EQ(loop("t*x - x*t"), LoopElem{});
}

TEST(Expr, BracketOfGenerators) {
  const RingElem two(2);
  EXPECT_EQ(loop("[x12, x03]"), (LoopElem{two, two * t, two * (one - t)}));
  EXPECT_EQ(loop("[x03, x12]"), -loop("[x12, x03]"));
}

TEST(Expr, PrecedenceAndPowers) {
  EXPECT_EQ(ring("-t^2"), -(t * t));
  EXPECT_EQ(ring("2^-1"), RingElem(Rational(1, 2)));
  EXPECT_EQ(ring("t^(-2)"), RingElem::t_inv().pow(2));
  EXPECT_EQ(ring("1 - 2*3"), RingElem(-5));
  EXPECT_EQ(ring("8/2/2"), RingElem(2));
  EXPECT_EQ(ring("(t-1)^-1 * (t-1)"), one);
}

TEST(Expr, Primes) {
  EXPECT_EQ(ring("t'"), one - RingElem::t_inv());
  EXPECT_EQ(ring("t''"), ring_prime(t, 2));
  EXPECT_EQ(ring("t'''"), t);
  EXPECT_EQ(loop("x12'"), std_gen({2, 3}));
  EXPECT_EQ(loop("x03''"), std_gen({0, 2}));
  EXPECT_EQ(loop("(x*t)'"), LoopElem::y(ring_prime(t)));
  EXPECT_EQ(ring("t'^2"), ring_prime(t).pow(2));
}

TEST(Expr, NamedConstants) {
  EXPECT_EQ(loop("a3"), seq_ab(SeqKind::A, 3, SeqMode::Closed));
  EXPECT_EQ(loop("b4"), seq_ab(SeqKind::B, 4, SeqMode::Closed));
  EXPECT_EQ(loop("X2 + Y0 - Z1"), seq_xyz(XyzKind::X, 2, XyzMode::Closed) + seq_xyz(XyzKind::Y, 0, XyzMode::Closed) -
                                       seq_xyz(XyzKind::Z, 1, XyzMode::Closed));
  EXPECT_EQ(loop("x30"), -std_gen({0, 3}));
}

TEST(Expr, DomainErrors) {
  EXPECT_THROW(evaluate("x / (t^2 - 4)"), DomainError);
  EXPECT_THROW(evaluate("1/0"), DomainError);
  EXPECT_THROW(evaluate("(t+1)^-1"), DomainError);
  EXPECT_NO_THROW(evaluate("x / (t^2 - t)"));
  EXPECT_EQ(error_position<DomainError>("x / (t^2 - 4)"), 2U);
}

TEST(Expr, LinearityErrors) {
  EXPECT_THROW(evaluate("x*y"), LinearityError);
  EXPECT_THROW(evaluate("t + x"), LinearityError);
  EXPECT_THROW(evaluate("x^2"), LinearityError);
  EXPECT_THROW(evaluate("1/x"), LinearityError);
  EXPECT_THROW(evaluate("[t, x]"), LinearityError);
  EXPECT_EQ(error_position<LinearityError>("t + x"), 2U);
}

TEST(Expr, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(error_position<SyntaxError>("(1+"), 3U);
  EXPECT_EQ(error_position<SyntaxError>("2 $ 3"), 2U);
  EXPECT_EQ(error_position<SyntaxError>("q12 + 1"), 0U);
  EXPECT_EQ(error_position<SyntaxError>("[x, y"), 5U);
  EXPECT_EQ(error_position<SyntaxError>("t^"), 2U);
  EXPECT_EQ(error_position<SyntaxError>("x11"), 0U);
  EXPECT_THROW(evaluate(""), SyntaxError);
}

TEST(Expr, RenderRoundTrip) {
  RandomSource rng(61);
  for (int k = 0; k < 100; ++k) {
    const RingElem a = rng.ring();
    EXPECT_EQ(evaluate(render(Value(a))), Value(a)) << render(Value(a));
    const LoopElem u = rng.loop();
    EXPECT_EQ(evaluate(render(Value(u))), Value(u)) << render(Value(u));
  }
  EXPECT_EQ(evaluate(render(Value(LoopElem{}))), Value(LoopElem{}));
}

}  // namespace
}  // namespace tetrabox
