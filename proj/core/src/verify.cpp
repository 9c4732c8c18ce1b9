#include "tetrabox/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tetrabox/loop.hpp"
#include "tetrabox/onsager.hpp"

namespace tetrabox {

namespace {

std::string idx(std::string_view prefix, long i) { return std::string(prefix) + std::to_string(i); }

std::string level_tag(int level) { return level == 0 ? "" : std::string(static_cast<std::size_t>(level), '\''); }

constexpr std::array<XyzKind, 3> kKinds{XyzKind::X, XyzKind::Y, XyzKind::Z};
constexpr std::array<Basis, 3> kBases{Basis::AB, Basis::XYZ, Basis::DELTA};

const char* kind_name(XyzKind kind) {
  switch (kind) {
    case XyzKind::X:
      return "x";
    case XyzKind::Y:
      return "y";
    case XyzKind::Z:
      return "z";
  }
  return "?";
}

Coords unit(Basis basis, Slot slot, long i, int level = 0) {
  Coords c(basis, level);
  c.add(slot, i, Rational(1));
  return c;
}

LoopElem table_vector(Basis basis, Slot slot, long i) { return reassemble(unit(basis, slot, i)); }

}  // namespace

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Tetra:
      return "tetra";
    case Suite::Sequences:
      return "sequences";
    case Suite::Operators:
      return "operators";
    case Suite::AbTable:
      return "ab-table";
    case Suite::XyzTable:
      return "xyz-table";
    case Suite::DeltaTable:
      return "delta-table";
    case Suite::Transitions:
      return "transitions";
    case Suite::Grid:
      return "grid";
    case Suite::Appendix:
      return "appendix";
    case Suite::All:
      return "all";
  }
  return "";
}

Suite parse_suite(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(Suite::All); ++k) {
    const auto suite = static_cast<Suite>(k);
    if (suite_name(suite) == name) {
      return suite;
    }
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Depths Depths::from_max(long max) {
  if (max < 5) {
    throw std::invalid_argument("--max must be at least 5");
  }
  return {max, 2 * max / 5, 3 * max / 5, 3 * max / 5, 2 * max / 5};
}

Report check_sequences(long n_max) {
  Report report;
  for (int level = 0; level < 3; ++level) {
    const AbTable table = ab_recursive_table(n_max, level);
    for (long n = 0; n <= n_max; ++n) {
      const auto k = static_cast<std::size_t>(n);
      report.expect_equal(idx("a", n) + level_tag(level) + " recursive = closed", table.a[k],
                          seq_ab(SeqKind::A, n, SeqMode::Closed, level));
      report.expect_equal(idx("b", n) + level_tag(level) + " recursive = closed", table.b[k],
                          seq_ab(SeqKind::B, n, SeqMode::Closed, level));
    }
  }
  return report;
}

Report check_xyz_sequences(long n_max) {
  Report report;
  for (int level = 0; level < 3; ++level) {
    for (long i = 0; 2 * i + 1 <= n_max; ++i) {
      for (XyzKind kind : kKinds) {
        report.expect_equal(idx(kind_name(kind), i) + level_tag(level) + " combination = closed",
                            seq_xyz(kind, i, XyzMode::Combination, level), seq_xyz(kind, i, XyzMode::Closed, level));
      }
    }
  }
  const AbTable table = ab_recursive_table(n_max, 0);
  for (long n = 1; n <= n_max; n += 2) {
    const auto k = static_cast<std::size_t>(n);
    report.expect_equal(idx("a", n) + " + " + idx("b", n) + " = 0", table.a[k] + table.b[k], LoopElem{});
    report.add(idx("a", n) + " != 0", !table.a[k].is_zero(), table.a[k].str(), "nonzero");
  }
  std::vector<LoopElem> all;
  for (long n = 0; n <= n_max; ++n) {
    try {
      const auto basis = u_space_basis(n);
      all.insert(all.end(), basis.begin(), basis.end());
      report.add(idx("U", n) + " basis", basis.size() == (n % 2 == 0 ? 2U : 1U));
    } catch (const std::logic_error& e) {
      report.add(idx("U", n) + " basis", false, e.what());
    }
  }
  const std::size_t rank = onsager_rank(all);
  report.add(idx("U0 + ... + U", n_max) + " is direct", rank == all.size(), std::to_string(rank),
             std::to_string(all.size()));
  report.expect_equal("x0 = x12", seq_xyz(XyzKind::X, 0, XyzMode::Closed), std_gen({1, 2}));
  report.expect_equal("(z0 - y0)/4 = x03",
                      LoopElem(seq_xyz(XyzKind::Z, 0, XyzMode::Closed) - seq_xyz(XyzKind::Y, 0, XyzMode::Closed)) *
                          RingElem(Rational(1, 4)),
                      std_gen({0, 3}));
  return report;
}

Report check_operators(RandomSource& rng, int count) {
  Report report;
  const LoopElem x12 = std_gen({1, 2});
  const LoopElem x03 = std_gen({0, 3});
  for (int k = 0; k < count; ++k) {
    const LoopElem u = rng.loop(6, 3, 3);
    report.expect_equal(idx("G = [x12,[x03,.]] #", k), op_G(u), bracket(x12, bracket(x03, u)));
    report.expect_equal(idx("H = [x03,[x12,.]] #", k), op_H(u), bracket(x03, bracket(x12, u)));
  }
  return report;
}

Report check_jacobi_automorphism(RandomSource& rng, int count) {
  Report report;
  for (int k = 0; k < count; ++k) {
    const LoopElem u = rng.loop(3, 2, 2);
    const LoopElem v = rng.loop(3, 2, 2);
    const LoopElem w = rng.loop(3, 2, 2);
    report.expect_equal(idx("jacobi #", k), bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v)),
                        LoopElem{});
    report.expect_equal(idx("antisymmetry #", k), bracket(u, v), -bracket(v, u));
    report.expect_equal(idx("prime preserves bracket #", k), loop_prime(bracket(u, v)),
                        bracket(loop_prime(u), loop_prime(v)));
    report.expect_equal(idx("prime has order three #", k), loop_prime(u, 3), u);
  }
  const Permutation cycle{0, 2, 3, 1};
  for (const auto& id : all_generators()) {
    report.expect_equal("(123) then sigma on " + id.str(), std_gen(permute(id, cycle)), loop_prime(std_gen(id)));
  }
  return report;
}

Report check_table(Basis basis, long depth) {
  Report report;
  const auto slots = basis_slots(basis);
  for (Slot s : slots) {
    for (Slot t : slots) {
      for (long i = 0; i <= depth; ++i) {
        const LoopElem u = table_vector(basis, s, i);
        for (long j = 0; j <= depth; ++j) {
          const LoopElem v = table_vector(basis, t, j);
          Coords expected;
          switch (basis) {
            case Basis::AB:
              expected = bracket_oracle_ab(s, i, t, j);
              break;
            case Basis::XYZ:
              expected = bracket_oracle_xyz(s, i, t, j);
              break;
            case Basis::DELTA:
              expected = bracket_oracle_delta(s, i, t, j);
              break;
          }
          report.expect_equal(std::string(basis_name(basis)) + " [" + std::string(slot_name(s)) + "[" +
                                  std::to_string(i) + "], " + std::string(slot_name(t)) + "[" + std::to_string(j) + "]]",
                              coords(bracket(u, v), basis), expected);
        }
      }
    }
  }
  return report;
}

Report check_transitions(RandomSource& rng, long depth) {
  Report report;
  for (Basis from : kBases) {
    for (Basis to : kBases) {
      if (from == to) {
        continue;
      }
      const std::string tag = std::string(basis_name(from)) + "->" + std::string(basis_name(to)) + " ";
      for (Slot s : basis_slots(from)) {
        for (long i = 0; i <= depth; ++i) {
          const Coords c = unit(from, s, i);
          const Coords moved = transition(c, to);
          report.expect_equal(tag + std::string(slot_name(s)) + "[" + std::to_string(i) + "]", moved,
                              coords(reassemble(c), to));
          report.expect_equal(tag + "round trip " + std::string(slot_name(s)) + "[" + std::to_string(i) + "]",
                              transition(moved, from), c);
        }
      }
      for (int k = 0; k < 10; ++k) {
        const int level = static_cast<int>(rng.integer(0, 2));
        const Coords c = rng.coords(from, level, depth);
        const Coords moved = transition(c, to);
        report.expect_equal(tag + "random #" + std::to_string(k), moved, coords(reassemble(c), to, level));
        report.expect_equal(tag + "random round trip #" + std::to_string(k), transition(moved, from), c);
      }
    }
  }
  return report;
}

Report check_grid(RandomSource& rng, int count) {
  Report report;
  for (int k = 0; k < count; ++k) {
    const LoopElem u = rng.loop(4, 3, 3);
    const LoopElem v = rng.loop(4, 3, 3);
    const NineGrid grid = decompose_nine(u);
    const std::string tag = idx("grid #", k);
    report.expect_equal(tag + " entries sum to input", grid.total(), u);
    bool memberships = true;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        memberships = memberships && in_grid_cell(grid.at(row, col), row, col);
      }
    }
    report.add(tag + " entries lie in their cells", memberships);
    const auto rows = decompose_X(u);
    for (int row = 0; row < 3; ++row) {
      report.expect_equal(tag + " row " + NineGrid::kRowLabels.at(row), grid.row_sum(row), rows.at(row));
    }
    for (int col = 0; col < 3; ++col) {
      const LoopElem part = grid.column_sum(col);
      report.add(tag + " column " + NineGrid::kColumnLabels.at(col) + " in subalgebra", is_in_onsager(part, col));
      report.expect_equal(tag + " column " + NineGrid::kColumnLabels.at(col) + " coordinates",
                          reassemble(coords(part, Basis::DELTA, col)), part);
    }
    const NineGrid sum = decompose_nine(u + v);
    const NineGrid gv = decompose_nine(v);
    bool linear = true;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        linear = linear && sum.at(row, col) == grid.at(row, col) + gv.at(row, col);
      }
    }
    report.add(tag + " linear", linear);
    for (int frame = 0; frame < 3; ++frame) {
      const RingElem a = u.component(frame);
      const auto parts = split_frame(a, frame);
      bool inside = parts[0] + parts[1] + parts[2] == a;
      for (int slot = 0; slot < 3; ++slot) {
        const auto [level, shape] = frame_component_subspace(frame, slot);
        inside = inside && in_poly_subspace(parts.at(slot), level, shape);
      }
      report.add(tag + " frame " + std::to_string(frame) + " split", inside);
    }
  }
  return report;
}

Report check_likeness(RandomSource& rng, long depth) {
  Report report;
  const std::array<GeneratorId, 3> rows{GeneratorId(1, 2), GeneratorId(2, 3), GeneratorId(3, 1)};
  for (int level = 0; level < 3; ++level) {
    for (long i = 0; i <= depth; ++i) {
      for (int kind = 0; kind < 3; ++kind) {
        const LoopElem v = seq_xyz(kKinds.at(kind), i, XyzMode::Closed, level);
        const int row = (kind + level) % 3;
        const std::string tag = idx(kind_name(kKinds.at(kind)), i) + level_tag(level);
        report.add(tag + " is " + rows.at(row).str() + "-like", is_like(rows.at(row), v));
        report.add(tag + " is " + rows.at(row).str() + "-like (definition)", is_like_definitional(rows.at(row), v));
        report.add(tag + " in cell (" + NineGrid::kRowLabels.at(row) + ", " + NineGrid::kColumnLabels.at(level) + ")",
                   in_grid_cell(v, row, level));
        for (int other = 0; other < 3; ++other) {
          if (other != row) {
            report.add(tag + " is not " + rows.at(other).str() + "-like",
                       !is_like(rows.at(other), v) && !is_like_definitional(rows.at(other), v));
          }
        }
      }
    }
  }
  for (const auto& id : canonical_generators()) {
    for (int k = 0; k < 4; ++k) {
      const LoopElem u = std_gen(id) * rng.ring(3, 2, 2);
      const LoopElem w = rng.loop(3, 2, 2);
      const std::string tag = id.str() + idx(" sample #", k);
      report.add(tag + " multiple is like", is_like(id, u) && is_like_definitional(id, u));
      report.add(tag + " tests agree on random element", is_like(id, w) == is_like_definitional(id, w));
      const LoopElem mixed = u + std_gen(id.opposite());
      report.add(tag + " tests agree on shifted multiple",
                 is_like(id, mixed) == is_like_definitional(id, mixed) && !is_like(id, mixed));
    }
  }
  return report;
}

Report check_appendix(long depth) {
  Report report;
  for (int level = 1; level < 3; ++level) {
    for (long n = 0; n <= depth; ++n) {
      for (SeqKind kind : {SeqKind::A, SeqKind::B}) {
        const char* name = kind == SeqKind::A ? "a" : "b";
        report.expect_equal(idx(name, n) + level_tag(level) + " is the primed image",
                            seq_ab(kind, n, SeqMode::Closed, level),
                            loop_prime(seq_ab(kind, n, SeqMode::Closed, 0), level));
      }
    }
    for (long i = 0; i <= depth / 2; ++i) {
      for (XyzKind kind : kKinds) {
        report.expect_equal(idx(kind_name(kind), i) + level_tag(level) + " is the primed image",
                            seq_xyz(kind, i, XyzMode::Closed, level),
                            loop_prime(seq_xyz(kind, i, XyzMode::Closed, 0), level));
        report.expect_equal(idx(kind_name(kind), i) + level_tag(level) + " delta vector is the primed image",
                            delta_vec(kind, i, level), loop_prime(delta_vec(kind, i, 0), level));
      }
    }
    std::vector<LoopElem> all;
    for (long n = 0; n <= depth / 2; ++n) {
      const auto basis = u_space_basis(n, level);
      all.insert(all.end(), basis.begin(), basis.end());
    }
    report.add("U" + level_tag(level) + " sum is direct", onsager_rank(all, level) == all.size());
  }
  return report;
}

Report run_suite(Suite suite, const VerifyOptions& options) {
  const Depths d = Depths::from_max(options.max);
  RandomSource rng(options.seed);
  Report report;
  const auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
  if (want(Suite::Tetra)) {
    report.append(verify_tetra_relations());
  }
  if (want(Suite::Sequences)) {
    report.append(check_sequences(d.sequences));
    report.append(check_xyz_sequences(d.sequences));
  }
  if (want(Suite::Operators)) {
    report.append(check_operators(rng, options.random_count));
    report.append(check_jacobi_automorphism(rng, options.random_count));
  }
  if (want(Suite::AbTable)) {
    report.append(check_table(Basis::AB, d.tables));
  }
  if (want(Suite::XyzTable)) {
    report.append(check_table(Basis::XYZ, d.tables));
    report.append(reconstruct_xyz(std::max(2L, d.reconstruction)));
  }
  if (want(Suite::DeltaTable)) {
    report.append(check_table(Basis::DELTA, d.tables));
  }
  if (want(Suite::Transitions)) {
    report.append(check_transitions(rng, d.transitions));
  }
  if (want(Suite::Grid)) {
    report.append(check_grid(rng, options.random_count));
    report.append(check_likeness(rng, d.likeness));
  }
  if (want(Suite::Appendix)) {
    report.append(check_appendix(d.sequences));
  }
  return report;
}

}  // namespace tetrabox
