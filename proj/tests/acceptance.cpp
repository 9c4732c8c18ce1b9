// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Library reports are cross-checked against the matrix oracles in support/.

#include <array>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "support/oracle.hpp"
#include "tetrabox/expr.hpp"
#include "tetrabox/loop.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/random.hpp"
#include "tetrabox/verify.hpp"

namespace {

using namespace tetrabox;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& name) {
    ++checks;
    if (!ok && pass) {
      first_failure = name;
    }
    pass = pass && ok;
  }

  void absorb(const Report& r) {
    for (const Check& c : r.checks()) {
      expect(c.pass, c.name + " [" + c.lhs + " vs " + c.rhs + "]");
    }
  }
};

std::size_t count_prefix(const Report& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const Check& c : r.checks()) {
    n += c.name.rfind(prefix, 0) == 0 ? 1 : 0;
  }
  return n;
}

oracle::Field scaled(const oracle::Field& f, long k) {
  return [f, k](const Rational& r) { return Rational(k) * f(r); };
}

oracle::Field plus(const oracle::Field& a, const oracle::Field& b) {
  return [a, b](const Rational& r) { return a(r) + b(r); };
}

oracle::Field primed(oracle::Field f, int level) {
  for (int k = 0; k < level; ++k) {
    f = oracle::prime(f);
  }
  return f;
}

bool dolan_grady(const oracle::Field& a, const oracle::Field& b) {
  const oracle::Field ab = oracle::bracket(a, b);
  return oracle::same(oracle::bracket(a, oracle::bracket(a, ab)), scaled(ab, 4));
}

Outcome tetrahedron_relations() {
  Outcome o;
  const Report r = verify_tetra_relations();
  o.absorb(r);
  o.expect(count_prefix(r, "antisymmetry") == 12, "12 antisymmetry checks");
  o.expect(count_prefix(r, "sl2") == 24, "24 sl2 checks");
  o.expect(count_prefix(r, "dolan-grady") == 6, "6 Dolan-Grady checks");

  for (const GeneratorId& id : all_generators()) {
    o.expect(oracle::agrees(std_gen(id), oracle::generator(id.i(), id.j())), "image of " + id.str());
    o.expect(oracle::agrees(std_gen(id) + std_gen(id.reversed()), [](const Rational&) { return oracle::Mat{}; }),
             "oracle antisymmetry " + id.str());
  }
  for (int h = 0; h < 4; ++h) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (h == i || i == j || h == j) {
          continue;
        }
        const oracle::Field hi = oracle::generator(h, i);
        const oracle::Field ij = oracle::generator(i, j);
        o.expect(oracle::same(oracle::bracket(hi, ij), plus(scaled(hi, 2), scaled(ij, 2))),
                 "oracle sl2 " + std::to_string(h) + std::to_string(i) + std::to_string(j));
      }
    }
  }
  for (const GeneratorId& id : std::array{GeneratorId(1, 2), GeneratorId(2, 3), GeneratorId(3, 1)}) {
    const GeneratorId op = id.opposite();
    const oracle::Field a = oracle::generator(id.i(), id.j());
    const oracle::Field b = oracle::generator(op.i(), op.j());
    o.expect(dolan_grady(a, b), "oracle DG " + id.str() + " on " + op.str());
    o.expect(dolan_grady(b, a), "oracle DG " + op.str() + " on " + id.str());
  }
  return o;
}

Outcome sequence_agreement() {
  Outcome o;
  const Report r = check_sequences(20);
  o.absorb(r);
  o.expect(r.checks().size() >= 3 * 21 * 2, "coverage of n <= 20 at three levels");
  for (int level = 0; level < 3; ++level) {
    for (long n = 0; n <= 20; ++n) {
      for (SeqKind kind : {SeqKind::A, SeqKind::B}) {
        const oracle::Field want = primed(oracle::seq(kind == SeqKind::A, n), level);
        o.expect(oracle::agrees(seq_ab(kind, n, SeqMode::Closed, level), want),
                 "closed form vs matrix recursion n=" + std::to_string(n) + " level " + std::to_string(level));
      }
    }
  }
  return o;
}

Outcome operator_formulas() {
  Outcome o;
  RandomSource rng(0x3001);
  o.absorb(check_operators(rng, 50));
  RandomSource again(0x3002);
  const oracle::Field x12 = oracle::generator(1, 2);
  const oracle::Field x03 = oracle::generator(0, 3);
  for (int k = 0; k < 50; ++k) {
    const LoopElem u = again.loop(6, 3, 3);
    const oracle::Field fu = oracle::field(u);
    o.expect(oracle::agrees(op_G(u), oracle::bracket(x12, oracle::bracket(x03, fu))), "G oracle #" + std::to_string(k));
    o.expect(oracle::agrees(op_H(u), oracle::bracket(x03, oracle::bracket(x12, fu))), "H oracle #" + std::to_string(k));
  }
  return o;
}

LoopElem loop_literal(const std::string& s) { return std::get<LoopElem>(evaluate(s)); }

Outcome table_reproduction() {
  Outcome o;
  // The nested-bracket table for i <= 5.
  const std::array<std::pair<std::string, std::string>, 6> nested{{
      {"x12", "x03"},
      {"[x03, x12]", "[x12, x03]"},
      {"[x12, [x03, x12]]", "[x03, [x12, x03]]"},
      {"[x03, [x12, [x03, x12]]]", "[x12,[x03, [x12, x03]]]"},
      {"[x12, [x03, [x12, [x03, x12]]]]", "[x03,[x12,[x03, [x12, x03]]]]"},
      {"[x03, [x12, [x03, [x12, [x03, x12]]]]]", "[x12,[x03,[x12,[x03, [x12, x03]]]]]"},
  }};
  for (long i = 0; i < 6; ++i) {
    const auto& [a, b] = nested.at(i);
    o.expect(seq_ab(SeqKind::A, i, SeqMode::Closed) == loop_literal(a), "nested a" + std::to_string(i));
    o.expect(seq_ab(SeqKind::B, i, SeqMode::Closed) == loop_literal(b), "nested b" + std::to_string(i));
  }

  // The four columns of the loop-algebra tables for 0 <= i <= 4.
  const std::array<std::string, 5> a_even{
      "x",
      "-4*(x*(2*t-1) + y*t + z*(t-1))",
      "4^2*(x*(2*t-1)^2 + y*t*(2*t-1) + z*(t-1)*(2*t-1))",
      "-4^3*(x*(2*t-1)^3 + y*t*(2*t-1)^2 + z*(t-1)*(2*t-1)^2)",
      "4^4*(x*(2*t-1)^4 + y*t*(2*t-1)^3 + z*(t-1)*(2*t-1)^3)",
  };
  const std::array<std::string, 5> b_even{
      "y*t + z*(t-1)",
      "-4*(x + y*t*(2*t-1) + z*(t-1)*(2*t-1))",
      "4^2*(x*(2*t-1) + y*t*(2*t-1)^2 + z*(t-1)*(2*t-1)^2)",
      "-4^3*(x*(2*t-1)^2 + y*t*(2*t-1)^3 + z*(t-1)*(2*t-1)^3)",
      "4^4*(x*(2*t-1)^3 + y*t*(2*t-1)^4 + z*(t-1)*(2*t-1)^4)",
  };
  const std::array<std::string, 5> a_odd{
      "-2*(x + y*t + z*(1-t))",
      "2*4*(x*(2*t-1) + y*t*(2*t-1) + z*(1-t)*(2*t-1))",
      "-2*4^2*(x*(2*t-1)^2 + y*t*(2*t-1)^2 + z*(1-t)*(2*t-1)^2)",
      "2*4^3*(x*(2*t-1)^3 + y*t*(2*t-1)^3 + z*(1-t)*(2*t-1)^3)",
      "-2*4^4*(x*(2*t-1)^4 + y*t*(2*t-1)^4 + z*(1-t)*(2*t-1)^4)",
  };
  const std::array<std::string, 5> b_odd{
      "2*(x + y*t + z*(1-t))",
      "-2*4*(x*(2*t-1) + y*t*(2*t-1) + z*(1-t)*(2*t-1))",
      "2*4^2*(x*(2*t-1)^2 + y*t*(2*t-1)^2 + z*(1-t)*(2*t-1)^2)",
      "-2*4^3*(x*(2*t-1)^3 + y*t*(2*t-1)^3 + z*(1-t)*(2*t-1)^3)",
      "2*4^4*(x*(2*t-1)^4 + y*t*(2*t-1)^4 + z*(1-t)*(2*t-1)^4)",
  };
  const auto entry = [&o](SeqKind kind, long n, const std::string& literal, const std::string& tag) {
    const LoopElem want = loop_literal(literal);
    o.expect(seq_ab(kind, n, SeqMode::Closed) == want, tag + " closed");
    o.expect(seq_ab(kind, n, SeqMode::Recursive) == want, tag + " recursive");
  };
  for (long i = 0; i <= 4; ++i) {
    const std::string k = std::to_string(i);
    entry(SeqKind::A, 2 * i, a_even.at(i), "a_2i i=" + k);
    entry(SeqKind::B, 2 * i, b_even.at(i), "b_2i i=" + k);
    entry(SeqKind::A, 2 * i + 1, a_odd.at(i), "a_2i+1 i=" + k);
    entry(SeqKind::B, 2 * i + 1, b_odd.at(i), "b_2i+1 i=" + k);
  }
  return o;
}

Outcome structure_constants() {
  Outcome o;
  for (Basis basis : {Basis::AB, Basis::XYZ, Basis::DELTA}) {
    const Report r = check_table(basis, 8);
    o.absorb(r);
    o.expect(r.checks().size() >= 9 * 81, std::string(basis_name(basis)) + " table covers all pairs");
  }
  return o;
}

Outcome transitions() {
  Outcome o;
  RandomSource rng(0x6001);
  o.absorb(check_transitions(rng, 12));
  return o;
}

Outcome direct_sums() {
  Outcome o;
  RandomSource rng(0x7001);
  o.absorb(check_grid(rng, 100));
  return o;
}

Outcome likeness() {
  Outcome o;
  RandomSource rng(0x8001);
  o.absorb(check_likeness(rng, 12));
  // Matrix-level definition: [x_ij, v] = 0 and [x_hk, [x_hk, [x_hk, v]]] = 4 [x_hk, v].
  const std::array<GeneratorId, 3> rows{GeneratorId(1, 2), GeneratorId(2, 3), GeneratorId(3, 1)};
  const std::array<XyzKind, 3> kinds{XyzKind::X, XyzKind::Y, XyzKind::Z};
  for (int level = 0; level < 3; ++level) {
    for (long i = 0; i <= 12; ++i) {
      for (int kind = 0; kind < 3; ++kind) {
        const GeneratorId id = rows.at((kind + level) % 3);
        const GeneratorId op = id.opposite();
        const oracle::Field v = oracle::field(seq_xyz(kinds.at(kind), i, XyzMode::Closed, level));
        const oracle::Field a = oracle::generator(id.i(), id.j());
        const oracle::Field b = oracle::generator(op.i(), op.j());
        const std::string tag = std::to_string(kind) + "/" + std::to_string(i) + "/" + std::to_string(level);
        o.expect(oracle::same(oracle::bracket(a, v), [](const Rational&) { return oracle::Mat{}; }),
                 "oracle commutes " + tag);
        o.expect(dolan_grady(b, v), "oracle Dolan-Grady " + tag);
      }
    }
  }
  return o;
}

Outcome reconstruction() {
  Outcome o;
  const Report r = reconstruct_xyz(8);
  o.absorb(r);
  for (const char* name : {"x1 via [x0,y0]", "x1 via [x0,z0]", "x2 via [x1,y0]", "x2 via [x1,z0]"}) {
    o.expect(count_prefix(r, name) == 1, std::string("report contains ") + name);
  }
  return o;
}

Outcome jacobi_and_automorphism() {
  Outcome o;
  RandomSource rng(0xa001);
  o.absorb(check_jacobi_automorphism(rng, 100));
  const Permutation cycle{0, 2, 3, 1};
  for (const GeneratorId& id : all_generators()) {
    const GeneratorId moved = permute(id, cycle);
    o.expect(oracle::same(oracle::generator(moved.i(), moved.j()), oracle::prime(oracle::generator(id.i(), id.j()))),
             "oracle sigma(123) = prime sigma on " + id.str());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"tetrahedron relations", tetrahedron_relations},
      {"sequence agreement", sequence_agreement},
      {"operator formulas", operator_formulas},
      {"table reproduction", table_reproduction},
      {"structure-constant theorems", structure_constants},
      {"transitions", transitions},
      {"direct sums", direct_sums},
      {"likeness", likeness},
      {"recursive reconstruction", reconstruction},
      {"Jacobi and automorphism", jacobi_and_automorphism},
  };
  bool all = true;
  int number = 1;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << number << ' ' << name << " (" << o.checks << " checks)";
    if (!o.pass) {
      std::cout << ": " << o.first_failure;
    }
    std::cout << '\n';
    all = all && o.pass;
    ++number;
  }
  return all ? 0 : 1;
}
