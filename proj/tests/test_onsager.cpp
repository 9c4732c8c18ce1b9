#include <gtest/gtest.h>

#include "support/oracle.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/random.hpp"

namespace tetrabox {
namespace {

const RingElem t = RingElem::t();

oracle::Field primed(oracle::Field f, int level) {
  for (int k = 0; k < level; ++k) {
    f = oracle::prime(f);
  }
  return f;
}

TEST(Onsager, SequencesAgainstMatrixRecursion) {
  for (int level = 0; level < 3; ++level) {
    for (long n = 0; n <= 10; ++n) {
      for (SeqKind kind : {SeqKind::A, SeqKind::B}) {
        const oracle::Field want = primed(oracle::seq(kind == SeqKind::A, n), level);
        EXPECT_TRUE(oracle::agrees(seq_ab(kind, n, SeqMode::Closed, level), want)) << n << " level " << level;
        EXPECT_TRUE(oracle::agrees(seq_ab(kind, n, SeqMode::Recursive, level), want)) << n << " level " << level;
      }
    }
  }
}

TEST(Onsager, OddTermsAreNegatives) {
  for (long n = 1; n <= 9; n += 2) {
    EXPECT_EQ(seq_ab(SeqKind::B, n, SeqMode::Closed), -seq_ab(SeqKind::A, n, SeqMode::Closed));
  }
}

TEST(Onsager, OperatorsAgainstDoubleBrackets) {
  RandomSource rng(41);
  const oracle::Field x12 = oracle::generator(1, 2);
  const oracle::Field x03 = oracle::generator(0, 3);
  for (int k = 0; k < 25; ++k) {
    const LoopElem u = rng.loop(5, 3, 3);
    const oracle::Field fu = oracle::field(u);
    EXPECT_TRUE(oracle::agrees(op_G(u), oracle::bracket(x12, oracle::bracket(x03, fu))));
    EXPECT_TRUE(oracle::agrees(op_H(u), oracle::bracket(x03, oracle::bracket(x12, fu))));
  }
}

TEST(Onsager, LikeBasisAnchors) {
  // x12 = x_0 and x03 = (z_0 - y_0)/4.
  EXPECT_EQ(seq_xyz(XyzKind::X, 0, XyzMode::Closed), std_gen({1, 2}));
  const LoopElem diff = seq_xyz(XyzKind::Z, 0, XyzMode::Closed) - seq_xyz(XyzKind::Y, 0, XyzMode::Closed);
  EXPECT_EQ(diff * RingElem(Rational(1, 4)), std_gen({0, 3}));
  for (int level = 0; level < 3; ++level) {
    for (long i = 0; i <= 6; ++i) {
      for (XyzKind kind : {XyzKind::X, XyzKind::Y, XyzKind::Z}) {
        EXPECT_EQ(seq_xyz(kind, i, XyzMode::Combination, level), seq_xyz(kind, i, XyzMode::Closed, level));
      }
    }
  }
}

TEST(Onsager, CoordinatesOfA2InTheLikeBasis) {
  const LoopElem a2 = seq_ab(SeqKind::A, 2, SeqMode::Closed);
  const Coords c = coords(a2, Basis::XYZ);
  EXPECT_EQ(c.str(), "X[1]=1, Y[0]=1, Z[0]=-1");
  const LoopElem rebuilt = seq_xyz(XyzKind::X, 1, XyzMode::Closed) + seq_xyz(XyzKind::Y, 0, XyzMode::Closed) -
                           seq_xyz(XyzKind::Z, 0, XyzMode::Closed);
  EXPECT_TRUE(oracle::agrees(rebuilt, oracle::seq(true, 2)));
}

TEST(Onsager, CoordinatesRoundTripAtEveryLevel) {
  RandomSource rng(42);
  for (Basis basis : {Basis::AB, Basis::XYZ, Basis::DELTA}) {
    for (int level = 0; level < 3; ++level) {
      for (int k = 0; k < 8; ++k) {
        const Coords c = rng.coords(basis, level, 7);
        EXPECT_EQ(coords(reassemble(c), basis, level), c);
      }
    }
  }
}

TEST(Onsager, DeltaCoordinatesOfSimpleElements) {
  const Coords c = coords(LoopElem::x(), Basis::DELTA);
  EXPECT_EQ(c.str(), "X[0]=1");
  // y t (2t-1)^2 is the delta vector Y[2].
  const Coords d = coords(LoopElem::y(t * (RingElem(2) * t - RingElem(1)).pow(2)), Basis::DELTA);
  EXPECT_EQ(d.str(), "Y[2]=1");
  EXPECT_EQ(coords(LoopElem{}, Basis::AB).str(), "0");
}

TEST(Onsager, ElementsOutsideTheSubalgebraAreRejected) {
  const LoopElem u = LoopElem::x(RingElem::t_inv());
  try {
    static_cast<void>(coords(u, Basis::AB, 0));
    FAIL() << "expected NotInSubalgebra";
  } catch (const NotInSubalgebra& e) {
    ASSERT_EQ(e.offending().size(), 1U);
    EXPECT_EQ(e.offending()[0].row, 0);
    EXPECT_EQ(e.offending()[0].col, 1);
  }
  EXPECT_EQ(coords(u, Basis::DELTA, 1).prime_level(), 1);
  EXPECT_FALSE(is_in_onsager(u, 0));
  EXPECT_TRUE(is_in_onsager(u, 1));
}

TEST(Onsager, CoordsValidation) {
  Coords c(Basis::AB, 0);
  EXPECT_THROW(c.add(Slot::X, 0, Rational(1)), std::invalid_argument);
  EXPECT_THROW(c.add(Slot::AEven, -1, Rational(1)), std::invalid_argument);
  c.add(Slot::AOdd, 3, Rational(2));
  c.add(Slot::AOdd, 3, Rational(-2));
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.max_index(), -1);
  EXPECT_EQ(parse_basis("delta"), Basis::DELTA);
  EXPECT_EQ(parse_slot("A_odd"), Slot::AOdd);
  EXPECT_THROW(parse_basis("abc"), std::invalid_argument);
}

TEST(Onsager, FiltrationPieces) {
  for (int level = 0; level < 3; ++level) {
    std::vector<LoopElem> all;
    for (long n = 0; n <= 7; ++n) {
      const auto piece = u_space_basis(n, level);
      EXPECT_EQ(piece.size(), n % 2 == 0 ? 2U : 1U);
      all.insert(all.end(), piece.begin(), piece.end());
    }
    EXPECT_EQ(onsager_rank(all, level), all.size());
  }
}

TEST(Onsager, ReconstructionReport) { EXPECT_TRUE(reconstruct_xyz(5).all_pass()); }

}  // namespace
}  // namespace tetrabox
