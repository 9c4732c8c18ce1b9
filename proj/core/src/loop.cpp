#include "tetrabox/loop.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tetrabox {

namespace {

int mod3(int k) { return ((k % 3) + 3) % 3; }

constexpr std::array<std::pair<int, int>, 6> kCanonicalPairs{{{1, 2}, {2, 3}, {3, 1}, {0, 3}, {0, 1}, {0, 2}}};

// Grid cell shape for a row component sitting in column `col`.
PolyShape cell_shape(int row, int col) {
  switch (mod3(row - col)) {
    case 0:
      return PolyShape::Full;
    case 1:
      return PolyShape::VanishAtZero;
    default:
      return PolyShape::VanishAtOne;
  }
}

RingElem tp() { return ring_prime(RingElem::t(), 1); }
RingElem tpp() { return ring_prime(RingElem::t(), 2); }

// Membership in x03 * A: f = 0 and t*h = (t-1)*g.
bool like_03(const LoopElem& u) {
  const RingElem t = RingElem::t();
  return u.f.is_zero() && t * u.h == (t - RingElem(1)) * u.g;
}

}  // namespace

const RingElem& LoopElem::component(int index) const {
  switch (index) {
    case 0:
      return f;
    case 1:
      return g;
    case 2:
      return h;
    default:
      throw std::out_of_range("loop component index must be 0, 1 or 2");
  }
}

RingElem& LoopElem::component(int index) {
  return const_cast<RingElem&>(std::as_const(*this).component(index));
}

LoopElem& LoopElem::operator+=(const LoopElem& rhs) {
  f += rhs.f;
  g += rhs.g;
  h += rhs.h;
  return *this;
}

LoopElem& LoopElem::operator-=(const LoopElem& rhs) {
  f -= rhs.f;
  g -= rhs.g;
  h -= rhs.h;
  return *this;
}

LoopElem& LoopElem::operator*=(const RingElem& scalar) {
  f *= scalar;
  g *= scalar;
  h *= scalar;
  return *this;
}

LoopElem LoopElem::operator-() const { return {-f, -g, -h}; }

std::string LoopElem::str() const {
  return "x⊗(" + f.str() + ") + y⊗(" + g.str() + ") + z⊗(" + h.str() + ")";
}

LoopElem bracket(const LoopElem& u, const LoopElem& v) {
  const RingElem p = u.f * v.g - u.g * v.f;
  const RingElem q = u.g * v.h - u.h * v.g;
  const RingElem r = u.h * v.f - u.f * v.h;
  const RingElem two(2);
  return {two * (p + r), two * (p + q), two * (q + r)};
}

LoopElem loop_prime(const LoopElem& u, int k) {
  LoopElem out = u;
  for (int step = 0; step < mod3(k); ++step) {
    out = LoopElem{ring_prime(out.h), ring_prime(out.f), ring_prime(out.g)};
  }
  return out;
}

GeneratorId::GeneratorId(int i, int j) : i_(i), j_(j) {
  if (i < 0 || i > 3 || j < 0 || j > 3) {
    throw std::invalid_argument("generator indices must lie in {0,1,2,3}");
  }
  if (i == j) {
    throw std::invalid_argument("generator indices must differ");
  }
}

bool GeneratorId::is_canonical() const {
  return std::ranges::any_of(kCanonicalPairs, [this](const auto& p) { return p.first == i_ && p.second == j_; });
}

GeneratorId GeneratorId::canonical() const { return is_canonical() ? *this : reversed(); }

GeneratorId GeneratorId::opposite() const {
  std::array<int, 2> rest{};
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != i_ && k != j_) {
      rest.at(n++) = k;
    }
  }
  return GeneratorId(rest[0], rest[1]).canonical();
}

std::string GeneratorId::str() const { return "x" + std::to_string(i_) + std::to_string(j_); }

std::array<GeneratorId, 12> all_generators() {
  std::vector<GeneratorId> ids;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) {
        ids.emplace_back(i, j);
      }
    }
  }
  return {ids[0], ids[1], ids[2], ids[3], ids[4], ids[5], ids[6], ids[7], ids[8], ids[9], ids[10], ids[11]};
}

std::array<GeneratorId, 6> canonical_generators() {
  return {GeneratorId(1, 2), GeneratorId(2, 3), GeneratorId(3, 1),
          GeneratorId(0, 3), GeneratorId(0, 1), GeneratorId(0, 2)};
}

LoopElem std_gen(const GeneratorId& id) {
  if (!id.is_canonical()) {
    return -std_gen(id.reversed());
  }
  const RingElem one(1);
  const RingElem t = RingElem::t();
  switch (id.i() * 4 + id.j()) {
    case 6:  // 12
      return LoopElem::x();
    case 11:  // 23
      return LoopElem::y();
    case 13:  // 31
      return LoopElem::z();
    case 3:  // 03
      return {RingElem(), t, t - one};
    case 1:  // 01
      return {tp() - one, RingElem(), tp()};
    default:  // 02
      return {tpp(), tpp() - one, RingElem()};
  }
}

int cyclic_power(const Permutation& perm) {
  constexpr std::array<Permutation, 3> kPowers{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
  for (int m = 0; m < 3; ++m) {
    if (perm == kPowers.at(m)) {
      return m;
    }
  }
  throw UnsupportedPermutation("only the cyclic group generated by (123) acts on the loop algebra");
}

GeneratorId permute(const GeneratorId& id, const Permutation& perm) {
  cyclic_power(perm);
  return {perm.at(id.i()), perm.at(id.j())};
}

LoopElem permute(const LoopElem& u, const Permutation& perm) { return loop_prime(u, cyclic_power(perm)); }

Report verify_tetra_relations() {
  Report report;
  const auto ids = all_generators();
  for (const auto& id : ids) {
    report.expect_equal("antisymmetry " + id.str() + " + " + id.reversed().str(),
                        std_gen(id) + std_gen(id.reversed()), LoopElem{});
  }
  for (int h = 0; h < 4; ++h) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (h == i || i == j || h == j) {
          continue;
        }
        const LoopElem a = std_gen({h, i});
        const LoopElem b = std_gen({i, j});
        report.expect_equal("sl2 [" + GeneratorId(h, i).str() + "," + GeneratorId(i, j).str() + "]", bracket(a, b),
                            LoopElem(a + b) * RingElem(2));
      }
    }
  }
  for (const auto& id : canonical_generators()) {
    const LoopElem a = std_gen(id);
    const LoopElem b = std_gen(id.opposite());
    const LoopElem ab = bracket(a, b);
    report.expect_equal("dolan-grady " + id.str() + " on " + id.opposite().str(), bracket(a, bracket(a, ab)),
                        ab * RingElem(4));
  }
  const RingElem one(1);
  const RingElem two(2);
  const RingElem t = RingElem::t();
  report.expect_equal("image [x12,x03]", bracket(std_gen({1, 2}), std_gen({0, 3})),
                      LoopElem{two, two * t, two * (one - t)});
  report.expect_equal("image [x23,x01]", bracket(std_gen({2, 3}), std_gen({0, 1})),
                      LoopElem{two * (one - tp()), two, two * tp()});
  report.expect_equal("image [x31,x02]", bracket(std_gen({3, 1}), std_gen({0, 2})),
                      LoopElem{two * tpp(), two * (one - tpp()), two});
  return report;
}

bool is_like(const GeneratorId& id, const LoopElem& u) {
  const GeneratorId c = id.canonical();
  switch (c.i() * 4 + c.j()) {
    case 6:
      return u.g.is_zero() && u.h.is_zero();
    case 11:
      return u.f.is_zero() && u.h.is_zero();
    case 13:
      return u.f.is_zero() && u.g.is_zero();
    case 3:
      return like_03(u);
    case 1:  // x01 = x03'
      return like_03(loop_prime(u, 2));
    default:  // x02 = x03''
      return like_03(loop_prime(u, 1));
  }
}

bool is_like_definitional(const GeneratorId& id, const LoopElem& u) {
  if (!bracket(std_gen(id), u).is_zero()) {
    return false;
  }
  const LoopElem w = std_gen(id.opposite());
  const LoopElem wu = bracket(w, u);
  return bracket(w, bracket(w, wu)) == wu * RingElem(4);
}

std::array<LoopElem, 3> decompose_X(const LoopElem& u) {
  return {LoopElem::x(u.f), LoopElem::y(u.g), LoopElem::z(u.h)};
}

LoopElem NineGrid::row_sum(int row) const {
  LoopElem out;
  for (const auto& cell : cells.at(row)) {
    out += cell;
  }
  return out;
}

LoopElem NineGrid::column_sum(int col) const {
  LoopElem out;
  for (const auto& row : cells) {
    out += row.at(col);
  }
  return out;
}

LoopElem NineGrid::total() const { return row_sum(0) + row_sum(1) + row_sum(2); }

NineGrid decompose_nine(const LoopElem& u) {
  NineGrid grid;
  for (int row = 0; row < 3; ++row) {
    const auto parts = split_frame(u.component(row), row);
    for (int m = 0; m < 3; ++m) {
      LoopElem cell;
      cell.component(row) = parts.at(m);
      grid.cells.at(row).at(mod3(row + m)) = std::move(cell);
    }
  }
  return grid;
}

bool in_grid_cell(const LoopElem& u, int row, int col) {
  for (int k = 0; k < 3; ++k) {
    if (k != row && !u.component(k).is_zero()) {
      return false;
    }
  }
  return in_poly_subspace(u.component(row), col, cell_shape(row, col));
}

bool is_in_onsager(const LoopElem& u, int k) {
  const NineGrid grid = decompose_nine(u);
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (col != mod3(k) && !grid.at(row, col).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace tetrabox
