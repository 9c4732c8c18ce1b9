#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "tetrabox/loop.hpp"
#include "tetrabox/random.hpp"

namespace tetrabox {
namespace {

const RingElem t = RingElem::t();

TEST(Loop, BracketIsTheMatrixCommutator) {
  RandomSource rng(31);
  for (int k = 0; k < 40; ++k) {
    const LoopElem u = rng.loop(4, 2, 2);
    const LoopElem v = rng.loop(4, 2, 2);
    EXPECT_TRUE(oracle::agrees(bracket(u, v), oracle::bracket(oracle::field(u), oracle::field(v))));
  }
}

TEST(Loop, EquitableRelations) {
  const LoopElem x = LoopElem::x();
  const LoopElem y = LoopElem::y();
  const LoopElem z = LoopElem::z();
  EXPECT_EQ(bracket(x, y), RingElem(2) * (x + y));
  EXPECT_EQ(bracket(y, z), RingElem(2) * (y + z));
  EXPECT_EQ(bracket(z, x), RingElem(2) * (z + x));
}

TEST(Loop, GeneratorImages) {
  for (const GeneratorId& id : all_generators()) {
    EXPECT_TRUE(oracle::agrees(std_gen(id), oracle::generator(id.i(), id.j()))) << id.str();
  }
}

TEST(Loop, PrimeRotatesAndSubstitutes) {
  RandomSource rng(32);
  for (int k = 0; k < 30; ++k) {
    const LoopElem u = rng.loop(4, 2, 2);
    EXPECT_TRUE(oracle::agrees(loop_prime(u), oracle::prime(oracle::field(u))));
    EXPECT_EQ(loop_prime(u, 3), u);
    EXPECT_EQ(loop_prime(u, -1), loop_prime(u, 2));
  }
}

TEST(Loop, TetrahedronRelationsReport) {
  const Report r = verify_tetra_relations();
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.checks().size(), 12U + 24U + 6U + 3U);
}

TEST(Loop, DolanGradyAgainstOracle) {
  const std::array<std::pair<GeneratorId, GeneratorId>, 3> pairs{
      std::pair{GeneratorId(1, 2), GeneratorId(0, 3)},
      std::pair{GeneratorId(2, 3), GeneratorId(0, 1)},
      std::pair{GeneratorId(3, 1), GeneratorId(0, 2)}};
  for (const auto& [p, q] : pairs) {
    for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      const oracle::Field A = oracle::generator(a.i(), a.j());
      const oracle::Field B = oracle::generator(b.i(), b.j());
      const oracle::Field lhs = oracle::bracket(A, oracle::bracket(A, oracle::bracket(A, B)));
      const oracle::Field ab = oracle::bracket(A, B);
      const oracle::Field rhs = [ab](const Rational& r) { return Rational(4) * ab(r); };
      EXPECT_TRUE(oracle::same(lhs, rhs));
    }
  }
}

TEST(Loop, GeneratorIdentifiers) {
  EXPECT_THROW(GeneratorId(1, 1), std::invalid_argument);
  EXPECT_THROW(GeneratorId(0, 4), std::invalid_argument);
  EXPECT_EQ(GeneratorId(2, 1).canonical(), GeneratorId(1, 2));
  EXPECT_EQ(GeneratorId(1, 3).canonical(), GeneratorId(3, 1));
  EXPECT_EQ(GeneratorId(1, 2).opposite(), GeneratorId(0, 3));
  EXPECT_EQ(GeneratorId(0, 2).opposite(), GeneratorId(3, 1));
  EXPECT_EQ(GeneratorId(3, 0).str(), "x30");
  EXPECT_EQ(std_gen(GeneratorId(3, 0)), -std_gen(GeneratorId(0, 3)));
}

TEST(Loop, CyclicPermutationsMatchThePrimeMap) {
  const Permutation c{0, 2, 3, 1};  // (123)
  EXPECT_EQ(cyclic_power(Permutation{0, 1, 2, 3}), 0);
  EXPECT_EQ(cyclic_power(c), 1);
  EXPECT_EQ(cyclic_power(Permutation{0, 3, 1, 2}), 2);
  EXPECT_THROW(cyclic_power(Permutation{1, 0, 2, 3}), UnsupportedPermutation);
  EXPECT_THROW(cyclic_power(Permutation{0, 2, 1, 3}), UnsupportedPermutation);
  for (const GeneratorId& id : all_generators()) {
    const GeneratorId moved = permute(id, c);
    EXPECT_EQ(moved, GeneratorId(c.at(id.i()), c.at(id.j())));
    EXPECT_EQ(std_gen(moved), loop_prime(std_gen(id)));
    EXPECT_TRUE(oracle::agrees(std_gen(moved), oracle::prime(oracle::generator(id.i(), id.j()))));
  }
}

TEST(Loop, Likeness) {
  const LoopElem u = std_gen({1, 2}) * (t * t + RingElem(1));
  EXPECT_TRUE(is_like({1, 2}, u));
  EXPECT_TRUE(is_like_definitional({1, 2}, u));
  EXPECT_FALSE(is_like({2, 3}, u));
  const LoopElem w = std_gen({0, 3}) * RingElem::t_inv();
  EXPECT_TRUE(is_like({0, 3}, w));
  EXPECT_TRUE(is_like_definitional({0, 3}, w));
  EXPECT_FALSE(is_like({0, 3}, LoopElem::y()));
  EXPECT_FALSE(is_like_definitional({0, 3}, LoopElem::y()));
  for (const GeneratorId& id : canonical_generators()) {
    EXPECT_TRUE(is_like(id, std_gen(id)));
    EXPECT_TRUE(is_like(id, std_gen(id.reversed())));
  }
}

TEST(Loop, RowDecomposition) {
  RandomSource rng(33);
  for (int k = 0; k < 20; ++k) {
    const LoopElem u = rng.loop(4, 2, 2);
    const auto rows = decompose_X(u);
    EXPECT_EQ(rows[0] + rows[1] + rows[2], u);
    EXPECT_EQ(rows[0], LoopElem::x(u.f));
  }
}

TEST(Loop, NineGridOnAHandExample) {
  // x/t = x * (1 - t') sits in X12 and in O'; z t^2 = z (t^2 - 1) + z, split between O and O''.
  const LoopElem u = LoopElem::x(RingElem::t_inv()) + LoopElem::z(t * t);
  const NineGrid g = decompose_nine(u);
  EXPECT_EQ(g.at(0, 1), LoopElem::x(RingElem::t_inv()));
  EXPECT_EQ(g.at(2, 0), LoopElem::z(t * t - RingElem(1)));
  EXPECT_EQ(g.at(2, 2), LoopElem::z(RingElem(1)));
  EXPECT_EQ(g.total(), u);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_TRUE(in_grid_cell(g.at(r, c), r, c));
    }
  }
  EXPECT_FALSE(in_grid_cell(LoopElem::x(RingElem::t_inv()), 0, 0));
}

TEST(Loop, Rendering) {
  EXPECT_EQ(std_gen({0, 3}).str(), "x⊗(0) + y⊗(t) + z⊗(t - 1)");
  EXPECT_EQ(LoopElem{}.str(), "x⊗(0) + y⊗(0) + z⊗(0)");
}

}  // namespace
}  // namespace tetrabox
