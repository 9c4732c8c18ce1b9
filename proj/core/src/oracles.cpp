#include <algorithm>
#include <optional>
#include <string>

#include "tetrabox/onsager.hpp"

namespace tetrabox {

namespace {

struct Term {
  Slot slot;
  long index;
  long coeff;
};

Coords make(Basis basis, std::initializer_list<Term> terms) {
  Coords out(basis, 0);
  for (const auto& term : terms) {
    if (term.index >= 0) {
      out.add(term.slot, term.index, Rational(term.coeff));
    }
  }
  return out;
}

Coords negated(const Coords& c) {
  Coords out(c.basis(), c.prime_level());
  out.add_scaled(c, Rational(-1));
  return out;
}

void require_basis(Slot s, Slot t, Basis basis) {
  const auto slots = basis_slots(basis);
  const auto ok = [&](Slot x) { return std::ranges::find(slots, x) != slots.end(); };
  if (!ok(s) || !ok(t)) {
    throw std::invalid_argument("slot does not belong to the oracle's basis");
  }
}

// Rows of the first bracket table exactly as stated; orders it does not list
// come back empty and are recovered by antisymmetry.
std::optional<Coords> ab_listed(Slot s, long i, Slot t, long j) {
  constexpr Basis kB = Basis::AB;
  if (s == Slot::AEven && t == Slot::AEven) {
    if ((i == 0 && j == 0) || (i >= 1 && j >= 1)) {
      return Coords(kB, 0);
    }
    if (i == 0) {
      return make(kB, {{Slot::AOdd, j - 1, 4}});
    }
    return std::nullopt;
  }
  if (s == Slot::BEven && t == Slot::AEven) {
    if (j == 0) {
      return make(kB, {{Slot::AOdd, i, 1}});
    }
    if (i == 0) {
      return make(kB, {{Slot::AOdd, j, 1}});
    }
    return make(kB, {{Slot::AOdd, i + j, 1}, {Slot::AOdd, i + j - 2, -16}});
  }
  if (s == Slot::BEven && t == Slot::BEven) {
    if ((i == 0 && j == 0) || (i >= 1 && j >= 1)) {
      return Coords(kB, 0);
    }
    if (j == 0) {
      return make(kB, {{Slot::AOdd, i - 1, 4}});
    }
    return std::nullopt;
  }
  if (s == Slot::AEven && t == Slot::AOdd) {
    if (i == 0) {
      return make(kB, {{Slot::AEven, j + 1, 1}});
    }
    return make(kB, {{Slot::AEven, i + j + 1, 1}, {Slot::BEven, i + j, 4}});
  }
  if (s == Slot::AOdd && t == Slot::BEven) {
    if (j == 0) {
      return make(kB, {{Slot::BEven, i + 1, 1}});
    }
    return make(kB, {{Slot::BEven, i + j + 1, 1}, {Slot::AEven, i + j, 4}});
  }
  if (s == Slot::AOdd && t == Slot::AOdd) {
    return Coords(kB, 0);
  }
  return std::nullopt;
}

std::optional<Coords> xyz_listed(Slot s, long i, Slot t, long j) {
  constexpr Basis kB = Basis::XYZ;
  constexpr Slot X = Slot::X;
  constexpr Slot Y = Slot::Y;
  constexpr Slot Z = Slot::Z;
  if (s == t) {
    return Coords(kB, 0);
  }
  if (s == X && t == Y) {
    if (j == 0) {
      if (i == 0) {
        return make(kB, {{X, 1, 1}, {Y, 0, 2}, {X, 0, -4}});
      }
      if (i == 1) {
        return make(kB, {{X, 2, 1}, {Y, 1, 2}, {X, 1, -4}, {Y, 0, -8}, {X, 0, 16}});
      }
      return make(kB, {{X, i + 1, 1}, {Y, i, 2}, {X, i, -4}, {Y, i - 1, -8}});
    }
    if (i <= 1) {
      return make(kB, {{X, i + j + 1, 1}, {Y, i + j, 2}});
    }
    return make(kB, {{X, i + j + 1, 1}, {Y, i + j, 2}, {X, i + j - 1, -16}, {Y, i + j - 2, -32}});
  }
  if (s == X && t == Z) {
    if (j == 0) {
      if (i == 0) {
        return make(kB, {{X, 1, 1}, {Z, 0, -2}, {X, 0, 4}});
      }
      if (i == 1) {
        return make(kB, {{X, 2, 1}, {Z, 1, -2}, {X, 1, 4}, {Z, 0, -8}, {X, 0, 16}});
      }
      return make(kB, {{X, i + 1, 1}, {Z, i, -2}, {X, i, 4}, {Z, i - 1, -8}});
    }
    if (i <= 1) {
      return make(kB, {{X, i + j + 1, 1}, {Z, i + j, -2}});
    }
    return make(kB, {{X, i + j + 1, 1}, {Z, i + j, -2}, {X, i + j - 1, -16}, {Z, i + j - 2, 32}});
  }
  if (s == Y && t == Z) {
    if (i == 0 && j == 0) {
      return make(kB, {{Z, 1, 1}, {Y, 1, -1}});
    }
    if (j == 0) {
      return make(kB, {{Z, i + 1, 1}, {Y, i + 1, -1}, {Z, i, 4}, {Y, i, -4}});
    }
    if (i == 0) {
      return make(kB, {{Z, j + 1, 1}, {Y, j + 1, -1}, {Z, j, -4}, {Y, j, 4}});
    }
    return make(kB, {{Z, i + j + 1, 1}, {Y, i + j + 1, -1}, {Z, i + j - 1, -16}, {Y, i + j - 1, 16}});
  }
  return std::nullopt;
}

std::optional<Coords> delta_listed(Slot s, long i, Slot t, long j) {
  constexpr Basis kB = Basis::DELTA;
  constexpr Slot X = Slot::X;
  constexpr Slot Y = Slot::Y;
  constexpr Slot Z = Slot::Z;
  const long n = i + j;
  if (s == t) {
    return Coords(kB, 0);
  }
  if (s == X && t == Y) {
    return make(kB, {{X, n, 1}, {X, n + 1, 1}, {Y, n, 2}});
  }
  if (s == X && t == Z) {
    return make(kB, {{X, n + 1, 1}, {X, n, -1}, {Z, n, -2}});
  }
  if (s == Y && t == Z) {
    return make(kB, {{Y, n, 1}, {Y, n + 1, -1}, {Z, n, 1}, {Z, n + 1, 1}});
  }
  return std::nullopt;
}

template <typename Listed>
Coords with_antisymmetry(Listed listed, Slot s, long i, Slot t, long j) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("oracle indices must be non-negative");
  }
  if (auto direct = listed(s, i, t, j)) {
    return *direct;
  }
  if (auto reverse = listed(t, j, s, i)) {
    return negated(*reverse);
  }
  throw std::logic_error("bracket table has no entry for this pair");
}

}  // namespace

Coords bracket_oracle_ab(Slot s, long i, Slot t, long j) {
  require_basis(s, t, Basis::AB);
  return with_antisymmetry(ab_listed, s, i, t, j);
}

Coords bracket_oracle_xyz(Slot s, long i, Slot t, long j) {
  require_basis(s, t, Basis::XYZ);
  return with_antisymmetry(xyz_listed, s, i, t, j);
}

Coords bracket_oracle_delta(Slot s, long i, Slot t, long j) {
  require_basis(s, t, Basis::DELTA);
  return with_antisymmetry(delta_listed, s, i, t, j);
}

Report reconstruct_xyz(long max_i) {
  if (max_i < 2) {
    throw std::invalid_argument("reconstruction needs max_i >= 2");
  }
  const auto closed = [](XyzKind kind, long i) { return seq_xyz(kind, i, XyzMode::Closed); };
  const auto q = [](const LoopElem& u, long num, long den) { return u * RingElem(Rational(num, den)); };
  const LoopElem x12 = std_gen({1, 2});
  const LoopElem x03 = std_gen({0, 3});

  std::vector<LoopElem> x{x12};
  std::vector<LoopElem> y{bracket(x03, x12) + q(x12, 2, 1) - q(x03, 2, 1)};
  std::vector<LoopElem> z{bracket(x03, x12) + q(x12, 2, 1) + q(x03, 2, 1)};
  const LoopElem x0 = x[0];
  const LoopElem y0 = y[0];
  const LoopElem z0 = z[0];

  Report report;
  const auto check = [&](const std::string& name, XyzKind kind, long i, const LoopElem& got) {
    report.expect_equal(name, got, closed(kind, i));
  };
  check("x0 = x12", XyzKind::X, 0, x0);
  check("y0 from [x03,x12]", XyzKind::Y, 0, y0);
  check("z0 from [x03,x12]", XyzKind::Z, 0, z0);
  report.expect_equal("x03 = (z0 - y0)/4", q(z0 - y0, 1, 4), x03);

  const LoopElem x1a = bracket(x0, y0) - q(y0, 2, 1) + q(x0, 4, 1);
  const LoopElem x1b = bracket(x0, z0) + q(z0, 2, 1) - q(x0, 4, 1);
  check("x1 via [x0,y0]", XyzKind::X, 1, x1a);
  check("x1 via [x0,z0]", XyzKind::X, 1, x1b);
  x.push_back(x1a);

  const LoopElem common1 = q(x1a, 2, 1) + q(y0, 2, 1) - q(z0, 2, 1) + q(bracket(x1a, y0), 1, 4) -
                           q(bracket(x1a, z0), 1, 4);
  y.push_back(common1 - q(bracket(y0, z0), 1, 2));
  z.push_back(common1 + q(bracket(y0, z0), 1, 2));
  check("y1 recursion", XyzKind::Y, 1, y[1]);
  check("z1 recursion", XyzKind::Z, 1, z[1]);

  const LoopElem x2a = bracket(x[1], y0) - q(y[1], 2, 1) + q(x[1], 4, 1) + q(y0, 8, 1) - q(x0, 16, 1);
  const LoopElem x2b = bracket(x[1], z0) + q(z[1], 2, 1) - q(x[1], 4, 1) + q(z0, 8, 1) - q(x0, 16, 1);
  check("x2 via [x1,y0]", XyzKind::X, 2, x2a);
  check("x2 via [x1,z0]", XyzKind::X, 2, x2b);
  x.push_back(x2a);

  for (long i = 2; i <= max_i; ++i) {
    const auto n = static_cast<std::size_t>(i);
    const LoopElem common = q(x[n], 2, 1) + q(bracket(x[n], y0), 1, 4) - q(bracket(x[n], z0), 1, 4);
    y.push_back(common - q(bracket(y[n - 1], z0), 1, 2));
    z.push_back(common + q(bracket(y0, z[n - 1]), 1, 2));
    check("y" + std::to_string(i) + " recursion", XyzKind::Y, i, y[n]);
    check("z" + std::to_string(i) + " recursion", XyzKind::Z, i, z[n]);
    if (i < max_i) {
      const LoopElem next_a = bracket(x[n], y0) - q(y[n], 2, 1) + q(x[n], 4, 1) + q(y[n - 1], 8, 1);
      const LoopElem next_b = bracket(x[n], z0) + q(z[n], 2, 1) - q(x[n], 4, 1) + q(z[n - 1], 8, 1);
      check("x" + std::to_string(i + 1) + " via [x" + std::to_string(i) + ",y0]", XyzKind::X, i + 1, next_a);
      check("x" + std::to_string(i + 1) + " via [x" + std::to_string(i) + ",z0]", XyzKind::X, i + 1, next_b);
      x.push_back(next_a);
    }
  }
  return report;
}

}  // namespace tetrabox
