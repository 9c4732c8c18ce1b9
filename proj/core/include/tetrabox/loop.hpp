#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tetrabox/report.hpp"
#include "tetrabox/ring.hpp"

namespace tetrabox {

/// x (*) f + y (*) g + z (*) h in the three-point sl2 loop algebra, where x, y, z
/// is the equitable basis ([x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x).
struct LoopElem {
  RingElem f;
  RingElem g;
  RingElem h;

  static LoopElem x(RingElem coeff = RingElem(1)) { return {std::move(coeff), {}, {}}; }
  static LoopElem y(RingElem coeff = RingElem(1)) { return {{}, std::move(coeff), {}}; }
  static LoopElem z(RingElem coeff = RingElem(1)) { return {{}, {}, std::move(coeff)}; }

  [[nodiscard]] bool is_zero() const { return f.is_zero() && g.is_zero() && h.is_zero(); }
  [[nodiscard]] const RingElem& component(int index) const;
  RingElem& component(int index);

  LoopElem& operator+=(const LoopElem& rhs);
  LoopElem& operator-=(const LoopElem& rhs);
  /// Right A-module action.
  LoopElem& operator*=(const RingElem& scalar);

  friend LoopElem operator+(LoopElem lhs, const LoopElem& rhs) { return lhs += rhs; }
  friend LoopElem operator-(LoopElem lhs, const LoopElem& rhs) { return lhs -= rhs; }
  friend LoopElem operator*(LoopElem lhs, const RingElem& rhs) { return lhs *= rhs; }
  friend LoopElem operator*(const RingElem& lhs, LoopElem rhs) { return rhs *= lhs; }
  LoopElem operator-() const;

  friend bool operator==(const LoopElem&, const LoopElem&) = default;

  /// "x⊗(f) + y⊗(g) + z⊗(h)", all three components always present.
  [[nodiscard]] std::string str() const;
};

LoopElem bracket(const LoopElem& u, const LoopElem& v);

/// (f, g, h) -> (h', f', g') applied (k mod 3) times.
LoopElem loop_prime(const LoopElem& u, int k = 1);

/// Ordered index pair (i, j) of a standard generator x_ij, i != j in {0,1,2,3}.
class GeneratorId {
 public:
  GeneratorId(int i, int j);

  [[nodiscard]] int i() const { return i_; }
  [[nodiscard]] int j() const { return j_; }
  [[nodiscard]] GeneratorId reversed() const { return {j_, i_}; }
  /// One of the six representatives 12, 23, 31, 03, 01, 02.
  [[nodiscard]] GeneratorId canonical() const;
  /// True when this ordered pair is its own canonical representative.
  [[nodiscard]] bool is_canonical() const;
  /// The complementary pair {h, k}, as a canonical representative.
  [[nodiscard]] GeneratorId opposite() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;

 private:
  int i_;
  int j_;
};

/// All twelve ordered pairs, lexicographic.
std::array<GeneratorId, 12> all_generators();
/// The six canonical representatives in the order 12, 23, 31, 03, 01, 02.
std::array<GeneratorId, 6> canonical_generators();

/// Image of the standard generator x_ij in the loop algebra.
LoopElem std_gen(const GeneratorId& id);

class UnsupportedPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation of {0,1,2,3} as the image list perm[k] = pi(k).
using Permutation = std::array<int, 4>;

/// Power m with perm = (123)^m; throws UnsupportedPermutation outside that cyclic group.
int cyclic_power(const Permutation& perm);
/// x_ij -> x_{pi(i) pi(j)} for pi in the cyclic group generated by (123).
GeneratorId permute(const GeneratorId& id, const Permutation& perm);
/// The loop-algebra automorphism matching `perm` (a power of the prime map).
LoopElem permute(const LoopElem& u, const Permutation& perm);

/// Antisymmetry, the sl2 relations [x_hi, x_ij] = 2x_hi + 2x_ij, the Dolan-Grady
/// relations, and the images of [x12,x03], [x23,x01], [x31,x02].
Report verify_tetra_relations();

/// Membership in X_ij = x_ij * A decided by the component conditions.
bool is_like(const GeneratorId& id, const LoopElem& u);
/// Membership decided by the defining conditions: u commutes with x_ij and
/// satisfies the Dolan-Grady relation with x_hk.
bool is_like_definitional(const GeneratorId& id, const LoopElem& u);

/// (x (*) f, y (*) g, z (*) h): the X12 + X23 + X31 splitting.
std::array<LoopElem, 3> decompose_X(const LoopElem& u);

/// Rows X12, X23, X31; columns O, O', O''.
struct NineGrid {
  std::array<std::array<LoopElem, 3>, 3> cells;

  [[nodiscard]] const LoopElem& at(int row, int col) const { return cells.at(row).at(col); }
  [[nodiscard]] LoopElem row_sum(int row) const;
  [[nodiscard]] LoopElem column_sum(int col) const;
  [[nodiscard]] LoopElem total() const;

  static constexpr std::array<const char*, 3> kRowLabels{"X12", "X23", "X31"};
  static constexpr std::array<const char*, 3> kColumnLabels{"O", "O'", "O''"};
};

NineGrid decompose_nine(const LoopElem& u);

/// Membership of u in the grid cell (row, col): the component of the row lies in
/// the matching polynomial subspace and the other two components vanish.
bool in_grid_cell(const LoopElem& u, int row, int col);

/// Membership in O (k = 0), O' (k = 1) or O'' (k = 2).
bool is_in_onsager(const LoopElem& u, int k);

}  // namespace tetrabox
