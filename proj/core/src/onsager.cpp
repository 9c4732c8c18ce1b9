#include "tetrabox/onsager.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace tetrabox {

namespace {

int mod3(int k) { return ((k % 3) + 3) % 3; }

RingElem var(int level) { return ring_prime(RingElem::t(), level); }

// Places a pattern (f, g, h) written in the level variable into the rotated
// slots of the primed subalgebra: level 1 reads (h, f, g), level 2 (g, h, f).
LoopElem rotate_in(RingElem f, RingElem g, RingElem h, int level) {
  switch (mod3(level)) {
    case 0:
      return {std::move(f), std::move(g), std::move(h)};
    case 1:
      return {std::move(h), std::move(f), std::move(g)};
    default:
      return {std::move(g), std::move(h), std::move(f)};
  }
}

// (-1)^i 4^i
Rational neg4_pow(long i) { return Rational(-4).pow(i); }

LoopElem scaled(const LoopElem& u, const Rational& c) { return u * RingElem(c); }

// Polynomial coefficients in the basis p_i = (2t-1)^i.
std::vector<Rational> p_coordinates(const Poly& f) {
  const Poly back = f.compose(Poly({Rational(1, 2), Rational(1, 2)}));
  return {back.coeffs().begin(), back.coeffs().end()};
}

// Delta coordinates of an element already known to lie in O (level 0).
Coords delta_coords_level0(const LoopElem& v, int level) {
  Coords out(Basis::DELTA, level);
  const auto put = [&](Slot slot, const Poly& p) {
    const auto cs = p_coordinates(p);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out.add(slot, static_cast<long>(i), cs[i]);
    }
  };
  put(Slot::X, v.f.num());
  put(Slot::Y, v.g.num().div_t_pow(1));
  auto [q, rem] = v.h.num().divide_linear(Rational(1));
  if (!rem.is_zero()) {
    throw std::logic_error("z component is not divisible by 1 - t");
  }
  put(Slot::Z, -q);
  return out;
}

// Solves the 3x3 system m * c = r exactly; m is known to be invertible.
std::array<Rational, 3> solve3(std::array<std::array<Rational, 3>, 3> m, std::array<Rational, 3> r) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    while (pivot < 3 && m.at(pivot).at(col).is_zero()) {
      ++pivot;
    }
    if (pivot == 3) {
      throw std::logic_error("singular basis block");
    }
    std::swap(m.at(col), m.at(pivot));
    std::swap(r.at(col), r.at(pivot));
    for (int row = 0; row < 3; ++row) {
      if (row == col || m.at(row).at(col).is_zero()) {
        continue;
      }
      const Rational factor = m.at(row).at(col) / m.at(col).at(col);
      for (int k = 0; k < 3; ++k) {
        m.at(row).at(k) -= factor * m.at(col).at(k);
      }
      r.at(row) -= factor * r.at(col);
    }
  }
  return {r[0] / m[0][0], r[1] / m[1][1], r[2] / m[2][2]};
}

// Graded elimination from delta coordinates into AB or XYZ: the grade-n basis
// vectors only reach delta indices <= n, so solve the top block and recurse.
Coords solve_graded(const Coords& delta, Basis target) {
  Coords residual = delta;
  Coords out(target, delta.prime_level());
  const auto slots = basis_slots(target);
  constexpr std::array<Slot, 3> kDelta{Slot::X, Slot::Y, Slot::Z};
  for (long n = residual.max_index(); n >= 0; --n) {
    std::array<Coords, 3> images;
    std::array<std::array<Rational, 3>, 3> m{};
    for (int k = 0; k < 3; ++k) {
      images.at(k) = delta_coords_level0(basis_vector(slots.at(k), n, 0), delta.prime_level());
      for (int d = 0; d < 3; ++d) {
        m.at(d).at(k) = images.at(k).get(kDelta.at(d), n);
      }
    }
    std::array<Rational, 3> r{};
    for (int d = 0; d < 3; ++d) {
      r.at(d) = residual.get(kDelta.at(d), n);
    }
    if (std::ranges::all_of(r, [](const Rational& v) { return v.is_zero(); })) {
      continue;
    }
    const auto c = solve3(m, r);
    for (int k = 0; k < 3; ++k) {
      if (!c.at(k).is_zero()) {
        out.add(slots.at(k), n, c.at(k));
        residual.add_scaled(images.at(k), -c.at(k));
      }
    }
  }
  if (!residual.empty()) {
    throw std::logic_error("graded elimination left a residual");
  }
  return out;
}

std::string grid_entries_text(const std::vector<GridEntry>& entries) {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    os << (k ? "; " : "") << "(" << NineGrid::kRowLabels.at(e.row) << ", " << NineGrid::kColumnLabels.at(e.col)
       << ") = " << e.value.str();
  }
  return os.str();
}

}  // namespace

RingElem p_power(long i, int level) {
  if (i < 0) {
    return {};
  }
  return (RingElem(2) * var(level) - RingElem(1)).pow(i);
}

LoopElem op_G(const LoopElem& u) {
  const RingElem t = RingElem::t();
  const RingElem one(1);
  const RingElem two_t_minus_one = RingElem(2) * t - one;
  const LoopElem inner{two_t_minus_one * u.f, t * u.f + (t - one) * u.g - t * u.h,
                       (t - one) * u.f + (one - t) * u.g + t * u.h};
  return inner * RingElem(-4);
}

LoopElem op_H(const LoopElem& u) {
  const RingElem two_t_minus_one = RingElem(2) * RingElem::t() - RingElem(1);
  const LoopElem inner{u.g - u.h, two_t_minus_one * u.g, two_t_minus_one * u.h};
  return inner * RingElem(-4);
}

AbTable ab_recursive_table(long n_max, int level) {
  const Permutation cycle{0, 2, 3, 1};
  GeneratorId id_a(1, 2);
  GeneratorId id_b(0, 3);
  for (int k = 0; k < mod3(level); ++k) {
    id_a = permute(id_a, cycle);
    id_b = permute(id_b, cycle);
  }
  AbTable table;
  if (n_max < 0) {
    return table;
  }
  const LoopElem a0 = std_gen(id_a);
  const LoopElem b0 = std_gen(id_b);
  table.a.push_back(a0);
  table.b.push_back(b0);
  for (long n = 1; n <= n_max; ++n) {
    const bool odd = n % 2 == 1;
    table.a.push_back(bracket(odd ? b0 : a0, table.a.back()));
    table.b.push_back(bracket(odd ? a0 : b0, table.b.back()));
  }
  return table;
}

LoopElem seq_ab(SeqKind kind, long n, SeqMode mode, int level) {
  if (n < 0) {
    return {};
  }
  if (mode == SeqMode::Recursive) {
    const AbTable table = ab_recursive_table(n, level);
    return kind == SeqKind::A ? table.a.back() : table.b.back();
  }
  const RingElem s = var(level);
  const RingElem one(1);
  const long i = n / 2;
  if (n % 2 == 0) {
    const Rational c = neg4_pow(i);
    if (kind == SeqKind::A) {
      return scaled(rotate_in(p_power(i, level), s * p_power(i - 1, level), (s - one) * p_power(i - 1, level), level),
                    c);
    }
    return scaled(rotate_in(p_power(i - 1, level), s * p_power(i, level), (s - one) * p_power(i, level), level), c);
  }
  Rational c = Rational(2) * neg4_pow(i) * Rational(-1);
  if (kind == SeqKind::B) {
    c = -c;
  }
  const RingElem p = p_power(i, level);
  return scaled(rotate_in(p, s * p, (one - s) * p, level), c);
}

LoopElem seq_xyz(XyzKind kind, long i, XyzMode mode, int level) {
  if (i < 0) {
    return {};
  }
  if (mode == XyzMode::Combination) {
    const AbTable table = ab_recursive_table(2 * i + 1, level);
    const auto a = [&](long n) { return n < 0 ? LoopElem{} : table.a.at(n); };
    const auto b = [&](long n) { return n < 0 ? LoopElem{} : table.b.at(n); };
    const RingElem two(2);
    const RingElem four(4);
    switch (kind) {
      case XyzKind::X:
        return a(2 * i) + b(2 * i - 2) * four;
      case XyzKind::Y:
        return a(2 * i + 1) + a(2 * i) * two + a(2 * i - 1) * four - b(2 * i) * two;
      case XyzKind::Z:
        return a(2 * i + 1) + a(2 * i) * two - a(2 * i - 1) * four + b(2 * i) * two;
    }
  }
  const RingElem s = var(level);
  const RingElem one(1);
  const Rational c = Rational(-1) * neg4_pow(i) * Rational(4);  // (-1)^(i+1) 4^(i+1)
  switch (kind) {
    case XyzKind::X:
      return scaled(rotate_in(p_power(i, level) - p_power(i - 2, level), {}, {}, level), neg4_pow(i));
    case XyzKind::Y:
      return scaled(rotate_in({}, s * (p_power(i, level) - p_power(i - 1, level)), {}, level), c);
    case XyzKind::Z:
      return scaled(rotate_in({}, {}, (one - s) * (p_power(i, level) + p_power(i - 1, level)), level), c);
  }
  return {};
}

LoopElem delta_vec(XyzKind kind, long i, int level) {
  if (i < 0) {
    return {};
  }
  const RingElem s = var(level);
  const RingElem p = p_power(i, level);
  switch (kind) {
    case XyzKind::X:
      return rotate_in(p, {}, {}, level);
    case XyzKind::Y:
      return rotate_in({}, s * p, {}, level);
    case XyzKind::Z:
      return rotate_in({}, {}, (RingElem(1) - s) * p, level);
  }
  return {};
}

std::string_view basis_name(Basis basis) {
  switch (basis) {
    case Basis::AB:
      return "ab";
    case Basis::XYZ:
      return "xyz";
    case Basis::DELTA:
      return "delta";
  }
  return "";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::AB, Basis::XYZ, Basis::DELTA}) {
    if (basis_name(b) == name) {
      return b;
    }
  }
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

std::string_view slot_name(Slot slot) {
  switch (slot) {
    case Slot::AEven:
      return "A_even";
    case Slot::BEven:
      return "B_even";
    case Slot::AOdd:
      return "A_odd";
    case Slot::X:
      return "X";
    case Slot::Y:
      return "Y";
    case Slot::Z:
      return "Z";
  }
  return "";
}

Slot parse_slot(std::string_view name) {
  for (Slot s : {Slot::AEven, Slot::BEven, Slot::AOdd, Slot::X, Slot::Y, Slot::Z}) {
    if (slot_name(s) == name) {
      return s;
    }
  }
  throw std::invalid_argument("unknown slot '" + std::string(name) + "'");
}

std::array<Slot, 3> basis_slots(Basis basis) {
  if (basis == Basis::AB) {
    return {Slot::AEven, Slot::BEven, Slot::AOdd};
  }
  return {Slot::X, Slot::Y, Slot::Z};
}

Coords::Coords(Basis basis, int prime_level) : basis_(basis), prime_level_(prime_level) {
  if (prime_level < 0 || prime_level > 2) {
    throw std::invalid_argument("prime level must be 0, 1 or 2");
  }
}

void Coords::check_slot(Slot slot) const {
  const auto slots = basis_slots(basis_);
  if (std::ranges::find(slots, slot) == slots.end()) {
    throw std::invalid_argument("slot " + std::string(slot_name(slot)) + " does not belong to basis " +
                                std::string(basis_name(basis_)));
  }
}

Rational Coords::get(Slot slot, long i) const {
  auto it = entries_.find({slot, i});
  return it == entries_.end() ? Rational() : it->second;
}

long Coords::max_index() const {
  long best = -1;
  for (const auto& [key, value] : entries_) {
    best = std::max(best, key.second);
  }
  return best;
}

void Coords::add(Slot slot, long i, const Rational& value) {
  check_slot(slot);
  if (i < 0) {
    throw std::invalid_argument("coordinate index must be non-negative");
  }
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = entries_.try_emplace({slot, i}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      entries_.erase(it);
    }
  }
}

void Coords::add_scaled(const Coords& other, const Rational& factor) {
  for (const auto& [key, value] : other.entries_) {
    add(key.first, key.second, value * factor);
  }
}

std::string Coords::str() const {
  if (entries_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : entries_) {
    os << (first ? "" : ", ") << slot_name(key.first) << "[" << key.second << "]=" << value.str();
    first = false;
  }
  return os.str();
}

LoopElem basis_vector(Slot slot, long i, int level) {
  switch (slot) {
    case Slot::AEven:
      return seq_ab(SeqKind::A, 2 * i, SeqMode::Closed, level);
    case Slot::BEven:
      return seq_ab(SeqKind::B, 2 * i, SeqMode::Closed, level);
    case Slot::AOdd:
      return seq_ab(SeqKind::A, 2 * i + 1, SeqMode::Closed, level);
    default:
      break;
  }
  // X, Y, Z slots are ambiguous between the XYZ and DELTA bases; callers that
  // need delta vectors go through reassemble().
  const XyzKind kind = slot == Slot::X ? XyzKind::X : slot == Slot::Y ? XyzKind::Y : XyzKind::Z;
  return seq_xyz(kind, i, XyzMode::Closed, level);
}

LoopElem reassemble(const Coords& c) {
  LoopElem out;
  for (const auto& [key, value] : c.entries()) {
    const auto [slot, i] = key;
    LoopElem v;
    if (c.basis() == Basis::DELTA) {
      const XyzKind kind = slot == Slot::X ? XyzKind::X : slot == Slot::Y ? XyzKind::Y : XyzKind::Z;
      v = delta_vec(kind, i, c.prime_level());
    } else {
      v = basis_vector(slot, i, c.prime_level());
    }
    out += scaled(v, value);
  }
  return out;
}

NotInSubalgebra::NotInSubalgebra(int level, std::vector<GridEntry> offending)
    : std::domain_error("element is not in the Onsager subalgebra " + std::string(NineGrid::kColumnLabels.at(level)) +
                        ": " + grid_entries_text(offending)),
      offending_(std::move(offending)) {}

Coords coords(const LoopElem& u, Basis basis, int prime_level) {
  const int level = mod3(prime_level);
  const NineGrid grid = decompose_nine(u);
  std::vector<GridEntry> offending;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (col != level && !grid.at(row, col).is_zero()) {
        offending.push_back({row, col, grid.at(row, col)});
      }
    }
  }
  if (!offending.empty()) {
    throw NotInSubalgebra(level, std::move(offending));
  }
  const Coords delta = delta_coords_level0(loop_prime(u, 3 - level), level);
  if (basis == Basis::DELTA) {
    return delta;
  }
  return solve_graded(delta, basis);
}

std::vector<LoopElem> u_space_basis(long n, int level) {
  if (n < 0) {
    throw std::invalid_argument("U_n needs n >= 0");
  }
  const AbTable table = ab_recursive_table(n, level);
  const LoopElem& a = table.a.back();
  const LoopElem& b = table.b.back();
  if (n % 2 == 1) {
    if (a.is_zero() || !(a + b).is_zero()) {
      throw std::logic_error("odd-index sequence elements must satisfy b_n = -a_n != 0");
    }
    return {a};
  }
  if (onsager_rank({a, b}, level) != 2) {
    throw std::logic_error("a_n and b_n must be linearly independent for even n");
  }
  return {a, b};
}

std::size_t onsager_rank(const std::vector<LoopElem>& vectors, int level) {
  std::vector<Coords> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    rows.push_back(coords(v, Basis::DELTA, level));
  }
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      continue;
    }
    const auto [pivot_key, pivot_value] = *rows[r].entries().begin();
    ++rank;
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      const Rational v = rows[s].get(pivot_key.first, pivot_key.second);
      if (!v.is_zero()) {
        rows[s].add_scaled(rows[r], -(v / pivot_value));
      }
    }
  }
  return rank;
}

}  // namespace tetrabox
