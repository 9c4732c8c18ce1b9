#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tetrabox/expr.hpp"
#include "tetrabox/loop.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/verify.hpp"

namespace tetrabox::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string format = "text";
  std::string basis = "ab";
  int prime = 0;
  int times = 1;
  long max = 20;
  std::string suite = "all";
  std::uint64_t seed = VerifyOptions{}.seed;
  bool verbose = false;
  std::string generator;
  std::vector<std::string> exprs;
};

/// Thrown for bad user input that is not an expression error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Command {
 public:
  Command(const Settings& settings, std::istream& in, std::ostream& out)
      : s_(settings), in_(in), out_(out) {}

  [[nodiscard]] bool json() const { return s_.format == "json"; }

  int eval() {
    const Value v = value(0);
    if (json()) {
      emit(to_json(v));
    } else {
      out_ << render(v) << '\n';
    }
    return kSuccess;
  }

  int expand() {
    const Value v = value(0);
    if (const auto* r = std::get_if<RingElem>(&v)) {
      const CanonExpansion e = canon_expand(*r);
      if (json()) {
        emit(to_json(e));
      } else {
        out_ << expansion_text(e) << '\n';
      }
      return kSuccess;
    }
    const LoopElem& u = std::get<LoopElem>(v);
    if (json()) {
      emit(Json{{"f", to_json(canon_expand(u.f))},
                {"g", to_json(canon_expand(u.g))},
                {"h", to_json(canon_expand(u.h))}});
    } else {
      out_ << "f: " << expansion_text(canon_expand(u.f)) << '\n'
           << "g: " << expansion_text(canon_expand(u.g)) << '\n'
           << "h: " << expansion_text(canon_expand(u.h)) << '\n';
    }
    return kSuccess;
  }

  int bracket_cmd() {
    const LoopElem u = loop(0);
    const LoopElem v = loop(1);
    print(bracket(u, v));
    return kSuccess;
  }

  int prime() {
    const Value v = value(0);
    if (const auto* r = std::get_if<RingElem>(&v)) {
      const RingElem p = ring_prime(*r, s_.times);
      if (json()) {
        emit(to_json(Value(p)));
      } else {
        out_ << p.str() << '\n';
      }
      return kSuccess;
    }
    print(loop_prime(std::get<LoopElem>(v), s_.times));
    return kSuccess;
  }

  int decompose() {
    const NineGrid grid = decompose_nine(loop(0));
    if (json()) {
      Json cells = Json::array();
      for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) {
          row.push_back(to_json(grid.at(r, c)));
        }
        cells.push_back(std::move(row));
      }
      emit(Json{{"rows", NineGrid::kRowLabels}, {"columns", NineGrid::kColumnLabels}, {"cells", cells}});
      return kSuccess;
    }
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        std::string label = std::string(NineGrid::kRowLabels[r]) + " ∩ " + NineGrid::kColumnLabels[c];
        label.resize(label.size() + 4 - std::string(NineGrid::kColumnLabels[c]).size(), ' ');
        out_ << label << ": " << grid.at(r, c).str() << '\n';
      }
    }
    return kSuccess;
  }

  int coords_cmd() {
    const LoopElem u = loop(0);
    try {
      const Coords c = coords(u, parse_basis(s_.basis), s_.prime);
      if (json()) {
        emit(to_json(c));
      } else {
        out_ << c.str() << '\n';
      }
      return kSuccess;
    } catch (const NotInSubalgebra& e) {
      if (json()) {
        Json cells = Json::array();
        for (const GridEntry& g : e.offending()) {
          cells.push_back(Json{{"row", NineGrid::kRowLabels[g.row]},
                               {"column", NineGrid::kColumnLabels[g.col]},
                               {"value", to_json(g.value)}});
        }
        emit(Json{{"error", e.what()}, {"prime_level", s_.prime}, {"offending", cells}});
      } else {
        out_ << "not in the Onsager subalgebra at prime level " << s_.prime << '\n';
        for (const GridEntry& g : e.offending()) {
          out_ << "  " << NineGrid::kRowLabels[g.row] << " ∩ " << NineGrid::kColumnLabels[g.col] << ": "
               << g.value.str() << '\n';
        }
      }
      return kCheckFailed;
    }
  }

  int like() {
    const GeneratorId id = generator(s_.generator);
    const LoopElem u = loop(0);
    const bool structural = is_like(id, u);
    const bool definitional = is_like_definitional(id, u);
    const bool ok = structural && definitional;
    if (json()) {
      emit(Json{{"generator", id.str()},
                {"structural", structural},
                {"definitional", definitional},
                {"like", ok}});
    } else {
      out_ << id.str() << "-like: " << (ok ? "yes" : "no") << " (structural " << (structural ? "yes" : "no")
           << ", definitional " << (definitional ? "yes" : "no") << ")\n";
    }
    return ok ? kSuccess : kCheckFailed;
  }

  int verify() {
    const Suite suite = parse_suite(s_.suite);
    VerifyOptions options;
    options.max = s_.max;
    options.seed = s_.seed;
    const Report report = run_suite(suite, options);
    if (json()) {
      Json checks = Json::array();
      for (const Check& c : report.checks()) {
        checks.push_back(Json{{"name", c.name},
                              {"status", c.pass ? "pass" : "fail"},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs}});
      }
      emit(Json{{"suite", suite_name(suite)},
                {"max", s_.max},
                {"seed", s_.seed},
                {"passed", report.passed()},
                {"failed", report.failed()},
                {"status", report.all_pass() ? "pass" : "fail"},
                {"checks", checks}});
    } else {
      for (const Check& c : report.checks()) {
        if (!c.pass || s_.verbose) {
          out_ << (c.pass ? "pass " : "FAIL ") << c.name << '\n';
        }
        if (!c.pass) {
          out_ << "  lhs: " << c.lhs << "\n  rhs: " << c.rhs << '\n';
        }
      }
      out_ << suite_name(suite) << ": " << report.passed() << " passed, " << report.failed() << " failed\n";
    }
    return report.all_pass() ? kSuccess : kCheckFailed;
  }

 private:
  std::string source(std::size_t k) {
    const std::string& arg = s_.exprs.at(k);
    if (arg != "-") {
      return arg;
    }
    if (!stdin_.has_value()) {
      stdin_ = std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    return *stdin_;
  }

  Value value(std::size_t k) { return evaluate(source(k)); }

  LoopElem loop(std::size_t k) {
    const Value v = value(k);
    if (const auto* u = std::get_if<LoopElem>(&v)) {
      return *u;
    }
    throw LinearityError("expected an element of L(sl2)+, got a scalar", 0);
  }

  static GeneratorId generator(const std::string& name) {
    if (name.size() == 3 && name[0] == 'x') {
      const int i = name[1] - '0';
      const int j = name[2] - '0';
      if (i >= 0 && i <= 3 && j >= 0 && j <= 3 && i != j) {
        return {i, j};
      }
    }
    throw UsageError("unknown generator '" + name + "'; expected x<ij> with distinct i, j in 0..3");
  }

  void print(const LoopElem& u) {
    if (json()) {
      emit(to_json(u));
    } else {
      out_ << u.str() << '\n';
    }
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  static Json to_json(const LoopElem& u) { return Json{{"f", u.f.str()}, {"g", u.g.str()}, {"h", u.h.str()}}; }

  static Json to_json(const Value& v) {
    if (const auto* r = std::get_if<RingElem>(&v)) {
      return Json{{"ring", r->str()}};
    }
    return to_json(std::get<LoopElem>(v));
  }

  static Json to_json(const Coords& c) {
    Json entries = Json::array();
    for (const auto& [key, value] : c.entries()) {
      entries.push_back(Json{{"slot", slot_name(key.first)}, {"index", key.second}, {"value", value.str()}});
    }
    return Json{{"basis", basis_name(c.basis())}, {"prime_level", c.prime_level()}, {"entries", entries}};
  }

  static Json to_json(const CanonExpansion& e) {
    auto part = [](const std::map<unsigned, Rational>& m) {
      Json out = Json::array();
      for (const auto& [i, c] : m) {
        out.push_back(Json{{"power", i}, {"coeff", c.str()}});
      }
      return out;
    };
    return Json{{"c0", e.c0.str()}, {"t", part(e.t_part)}, {"t'", part(e.tp_part)}, {"t''", part(e.tpp_part)}};
  }

  /// Parseable sum c0 + c*t^i + c*t'^i + c*t''^i.
  static std::string expansion_text(const CanonExpansion& e) {
    std::string out;
    auto term = [&out](const Rational& c, const std::string& var) {
      const bool negative = c < Rational(0);
      const Rational magnitude = negative ? -c : c;
      if (out.empty()) {
        out = negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      out += magnitude.str();
      if (!var.empty()) {
        out += "*" + var;
      }
    };
    if (!e.c0.is_zero()) {
      term(e.c0, "");
    }
    for (const auto& [part, var] : {std::pair{&e.t_part, "t"}, {&e.tp_part, "t'"}, {&e.tpp_part, "t''"}}) {
      for (const auto& [i, c] : *part) {
        term(c, std::string(var) + "^" + std::to_string(i));
      }
    }
    return out.empty() ? "0" : out;
  }

  const Settings& s_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::string> stdin_;
};

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (Suite s : {Suite::Tetra, Suite::Sequences, Suite::Operators, Suite::AbTable, Suite::XyzTable,
                  Suite::DeltaTable, Suite::Transitions, Suite::Grid, Suite::Appendix, Suite::All}) {
    names.emplace_back(suite_name(s));
  }
  return names;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact computations in the tetrahedron algebra through its loop-algebra realization"};
  app.name("tetrabox");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto expr_arg = [&s](CLI::App* sub, int count) {
    sub->add_option("expr", s.exprs, "Expression, or - to read stdin")->required()->expected(count);
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression to normal form");
  expr_arg(eval, 1);
  CLI::App* expand = app.add_subcommand("expand", "Coordinates of a ring element in 1, t^i, t'^i, t''^i");
  expr_arg(expand, 1);
  CLI::App* bracket = app.add_subcommand("bracket", "Lie bracket of two loop elements");
  expr_arg(bracket, 2);
  CLI::App* prime = app.add_subcommand("prime", "Apply the order-3 automorphism");
  prime->add_option("--times", s.times, "Number of applications")->check(CLI::Range(0, 2))->capture_default_str();
  expr_arg(prime, 1);
  CLI::App* decompose = app.add_subcommand("decompose", "Nine-way decomposition by X12/X23/X31 and O/O'/O''");
  expr_arg(decompose, 1);
  CLI::App* coords = app.add_subcommand("coords", "Coordinates in a basis of a primed Onsager subalgebra");
  coords->add_option("--basis", s.basis, "Basis")->check(CLI::IsMember({"ab", "xyz", "delta"}))->capture_default_str();
  coords->add_option("--prime", s.prime, "Prime level")->check(CLI::Range(0, 2))->capture_default_str();
  expr_arg(coords, 1);
  CLI::App* like = app.add_subcommand("like", "Test whether an element is x_ij-like");
  like->add_option("generator", s.generator, "Generator name, e.g. x12")->required();
  expr_arg(like, 1);
  CLI::App* verify = app.add_subcommand("verify", "Run an identity sweep and report");
  verify->add_option("--suite", s.suite, "Suite")->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--max", s.max, "Depth bound N (at least 5)")->check(CLI::Range(5L, 1000L))
      ->capture_default_str();
  verify->add_option("--seed", s.seed, "Seed for randomized checks")->capture_default_str();
  verify->add_flag("-v,--verbose", s.verbose, "List passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  Command cmd(s, in, out);
  try {
    if (eval->parsed()) {
      return cmd.eval();
    }
    if (expand->parsed()) {
      return cmd.expand();
    }
    if (bracket->parsed()) {
      return cmd.bracket_cmd();
    }
    if (prime->parsed()) {
      return cmd.prime();
    }
    if (decompose->parsed()) {
      return cmd.decompose();
    }
    if (coords->parsed()) {
      return cmd.coords_cmd();
    }
    if (like->parsed()) {
      return cmd.like();
    }
    if (verify->parsed()) {
      return cmd.verify();
    }
  } catch (const ExprError& e) {
    err << "tetrabox: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "tetrabox: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tetrabox::cli
