#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tetrabox/loop.hpp"
#include "tetrabox/rational.hpp"
#include "tetrabox/ring.hpp"

namespace tetrabox {

/// p_i = (2s - 1)^i in the variable s = t, t' or t'' (level 0, 1, 2); zero for i < 0.
RingElem p_power(long i, int level = 0);

/// [x12, [x03, u]] in closed coordinate form.
LoopElem op_G(const LoopElem& u);
/// [x03, [x12, u]] in closed coordinate form.
LoopElem op_H(const LoopElem& u);

enum class SeqKind : std::uint8_t { A, B };
enum class SeqMode : std::uint8_t { Recursive, Closed };

/// a_0..a_{n_max} and b_0..b_{n_max} built by alternating brackets from the
/// generators of the Onsager subalgebra at the given level.
struct AbTable {
  std::vector<LoopElem> a;
  std::vector<LoopElem> b;
};
AbTable ab_recursive_table(long n_max, int level = 0);

/// a_n or b_n; indices below zero give 0.
LoopElem seq_ab(SeqKind kind, long n, SeqMode mode, int level = 0);

enum class XyzKind : std::uint8_t { X, Y, Z };
enum class XyzMode : std::uint8_t { Combination, Closed };

/// The like-element basis vectors x_i, y_i, z_i. Combination mode assembles them
/// from the recursive a/b sequences.
LoopElem seq_xyz(XyzKind kind, long i, XyzMode mode, int level = 0);

/// x(*)p_i, y(*)t p_i, z(*)(1-t)p_i, primed as requested.
LoopElem delta_vec(XyzKind kind, long i, int level = 0);

enum class Basis : std::uint8_t { AB, XYZ, DELTA };
enum class Slot : std::uint8_t { AEven, BEven, AOdd, X, Y, Z };

std::string_view basis_name(Basis basis);
Basis parse_basis(std::string_view name);
std::string_view slot_name(Slot slot);
Slot parse_slot(std::string_view name);
/// The three slots used by a basis, in order.
std::array<Slot, 3> basis_slots(Basis basis);

/// Sparse coordinates of an element of a (primed) Onsager subalgebra.
class Coords {
 public:
  using Key = std::pair<Slot, long>;

  Coords() = default;
  Coords(Basis basis, int prime_level);

  [[nodiscard]] Basis basis() const { return basis_; }
  [[nodiscard]] int prime_level() const { return prime_level_; }
  [[nodiscard]] const std::map<Key, Rational>& entries() const { return entries_; }
  [[nodiscard]] Rational get(Slot slot, long i) const;
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  /// Largest index carrying a nonzero entry; -1 when empty.
  [[nodiscard]] long max_index() const;

  /// Adds `value` to the entry, dropping it when the sum vanishes.
  void add(Slot slot, long i, const Rational& value);
  void add_scaled(const Coords& other, const Rational& factor);

  friend bool operator==(const Coords&, const Coords&) = default;

  /// "X[1]=1, Y[0]=1, Z[0]=-1"; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  void check_slot(Slot slot) const;

  Basis basis_ = Basis::AB;
  int prime_level_ = 0;
  std::map<Key, Rational> entries_;
};

/// The basis vector behind a coordinate slot (closed forms).
LoopElem basis_vector(Slot slot, long i, int level = 0);
/// Sum of coordinates times basis vectors.
LoopElem reassemble(const Coords& coords);

struct GridEntry {
  int row;
  int col;
  LoopElem value;
};

class NotInSubalgebra : public std::domain_error {
 public:
  NotInSubalgebra(int level, std::vector<GridEntry> offending);
  [[nodiscard]] const std::vector<GridEntry>& offending() const { return offending_; }

 private:
  std::vector<GridEntry> offending_;
};

/// Unique coordinates of u in the chosen basis of the Onsager subalgebra at `prime_level`.
Coords coords(const LoopElem& u, Basis basis, int prime_level = 0);

/// Change of basis through the explicit summation formulas.
Coords transition(const Coords& c, Basis to);

/// Basis of U_n: [a_n] for odd n, [a_n, b_n] for even n. Throws std::logic_error
/// when the expected relations fail.
std::vector<LoopElem> u_space_basis(long n, int level = 0);

/// Rank of vectors lying in the Onsager subalgebra at `level`.
std::size_t onsager_rank(const std::vector<LoopElem>& vectors, int level = 0);

/// Structure constants from the bracket tables, as coordinates in the matching basis.
Coords bracket_oracle_ab(Slot s, long i, Slot t, long j);
Coords bracket_oracle_xyz(Slot s, long i, Slot t, long j);
Coords bracket_oracle_delta(Slot s, long i, Slot t, long j);

/// Rebuilds x_i, y_i, z_i for i <= max_i from x_0, y_0, z_0 by the bracket recursion
/// and compares with the closed forms.
Report reconstruct_xyz(long max_i);

}  // namespace tetrabox
