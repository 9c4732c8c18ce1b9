#include "tetrabox/expr.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>

#include "tetrabox/onsager.hpp"

namespace tetrabox {

namespace {

constexpr std::string_view kTensor = "\xE2\x8A\x97";  // ⊗

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    skip_space();
    if (pos_ != input_.size()) {
      fail("unexpected '" + std::string(1, input_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (input_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) {
      fail("expected '" + std::string(token) + "'");
    }
  }

  static std::unique_ptr<Expr> node(Expr::Kind kind, std::size_t position) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->position = position;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind kind, std::size_t position, std::unique_ptr<Expr> lhs,
                                      std::unique_ptr<Expr> rhs) {
    auto e = node(kind, position);
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept("+")) {
        lhs = binary(Expr::Kind::Add, at, std::move(lhs), term());
      } else if (accept("-")) {
        lhs = binary(Expr::Kind::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept("*") || accept(kTensor)) {
        lhs = binary(Expr::Kind::Mul, at, std::move(lhs), unary());
      } else if (accept("/")) {
        lhs = binary(Expr::Kind::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept("-")) {
      auto e = node(Expr::Kind::Neg, at);
      e->children.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = postfix();
    skip_space();
    const std::size_t at = pos_;
    if (!accept("^")) {
      return base;
    }
    const bool wrapped = accept("(");
    const bool negative = accept("-");
    const long n = integer();
    if (wrapped) {
      expect(")");
    }
    auto e = node(Expr::Kind::Pow, at);
    e->exponent = negative ? -n : n;
    e->children.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> postfix() {
    auto inner = primary();
    long primes = 0;
    const std::size_t at = pos_;
    while (pos_ < input_.size() && input_[pos_] == '\'') {
      ++pos_;
      ++primes;
    }
    if (primes == 0) {
      return inner;
    }
    auto e = node(Expr::Kind::Prime, at);
    e->exponent = primes;
    e->children.push_back(std::move(inner));
    return e;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer");
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(input_.data() + start, input_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  std::unique_ptr<Expr> primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= input_.size()) {
      fail("unexpected end of input");
    }
    const char c = input_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
        ++pos_;
      }
      auto e = node(Expr::Kind::Number, at);
      e->text = std::string(input_.substr(start, pos_ - start));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < input_.size() && std::isalnum(static_cast<unsigned char>(input_[pos_]))) {
        ++pos_;
      }
      auto e = node(Expr::Kind::Symbol, at);
      e->text = std::string(input_.substr(start, pos_ - start));
      return e;
    }
    if (accept("(")) {
      auto e = expr();
      expect(")");
      return e;
    }
    if (accept("[")) {
      auto lhs = expr();
      expect(",");
      auto rhs = expr();
      expect("]");
      return binary(Expr::Kind::Bracket, at, std::move(lhs), std::move(rhs));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

bool all_digits(std::string_view s) {
  return !s.empty() && s.size() < 10 &&
         std::ranges::all_of(s, [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

Value symbol(const Expr& e) {
  const std::string& name = e.text;
  if (name == "t") {
    return RingElem::t();
  }
  if (name == "x") {
    return LoopElem::x();
  }
  if (name == "y") {
    return LoopElem::y();
  }
  if (name == "z") {
    return LoopElem::z();
  }
  const std::string_view rest = std::string_view(name).substr(1);
  if (name.size() == 3 && name[0] == 'x' && all_digits(rest)) {
    const int i = name[1] - '0';
    const int j = name[2] - '0';
    if (i <= 3 && j <= 3 && i != j) {
      return std_gen({i, j});
    }
  }
  if (name.size() > 1 && all_digits(rest)) {
    const long n = std::stol(std::string(rest));
    switch (name[0]) {
      case 'a':
        return seq_ab(SeqKind::A, n, SeqMode::Closed);
      case 'b':
        return seq_ab(SeqKind::B, n, SeqMode::Closed);
      case 'X':
        return seq_xyz(XyzKind::X, n, XyzMode::Closed);
      case 'Y':
        return seq_xyz(XyzKind::Y, n, XyzMode::Closed);
      case 'Z':
        return seq_xyz(XyzKind::Z, n, XyzMode::Closed);
      default:
        break;
    }
  }
  throw SyntaxError("unknown name '" + name + "' at position " + std::to_string(e.position), e.position);
}

bool is_loop(const Value& v) { return std::holds_alternative<LoopElem>(v); }

const RingElem& ring_of(const Value& v) { return std::get<RingElem>(v); }

const LoopElem& loop_of(const Value& v) { return std::get<LoopElem>(v); }

std::string at(const Expr& e) { return " at position " + std::to_string(e.position); }

RingElem invert(const RingElem& d, const Expr& e) {
  if (d.is_zero()) {
    throw DomainError("division by zero" + at(e), e.position);
  }
  auto inv = d.inverse();
  if (!inv) {
    throw DomainError("denominator " + d.str() + " is not a unit of A" + at(e), e.position);
  }
  return *inv;
}

Value eval_node(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      try {
        return RingElem(Rational::parse(e.text));
      } catch (const std::invalid_argument&) {
        throw SyntaxError("bad number" + at(e), e.position);
      }
    case K::Symbol:
      return symbol(e);
    case K::Neg: {
      const Value v = eval_node(*e.children[0]);
      return is_loop(v) ? Value(-loop_of(v)) : Value(-ring_of(v));
    }
    case K::Add:
    case K::Sub: {
      const Value l = eval_node(*e.children[0]);
      const Value r = eval_node(*e.children[1]);
      if (is_loop(l) != is_loop(r)) {
        throw LinearityError("cannot add a scalar to a loop element" + at(e), e.position);
      }
      if (is_loop(l)) {
        return e.kind == K::Add ? loop_of(l) + loop_of(r) : loop_of(l) - loop_of(r);
      }
      return e.kind == K::Add ? ring_of(l) + ring_of(r) : ring_of(l) - ring_of(r);
    }
    case K::Mul: {
      const Value l = eval_node(*e.children[0]);
      const Value r = eval_node(*e.children[1]);
      if (is_loop(l) && is_loop(r)) {
        throw LinearityError("x, y, z may appear only linearly" + at(e), e.position);
      }
      if (is_loop(l)) {
        return loop_of(l) * ring_of(r);
      }
      if (is_loop(r)) {
        return ring_of(l) * loop_of(r);
      }
      return ring_of(l) * ring_of(r);
    }
    case K::Div: {
      const Value l = eval_node(*e.children[0]);
      const Value r = eval_node(*e.children[1]);
      if (is_loop(r)) {
        throw LinearityError("cannot divide by a loop element" + at(e), e.position);
      }
      const RingElem inv = invert(ring_of(r), e);
      return is_loop(l) ? Value(loop_of(l) * inv) : Value(ring_of(l) * inv);
    }
    case K::Pow: {
      const Value base = eval_node(*e.children[0]);
      if (is_loop(base)) {
        throw LinearityError("cannot raise a loop element to a power" + at(e), e.position);
      }
      const RingElem& b = ring_of(base);
      if (e.exponent < 0) {
        return invert(b, e).pow(-e.exponent);
      }
      return b.pow(e.exponent);
    }
    case K::Prime: {
      const Value v = eval_node(*e.children[0]);
      const int k = static_cast<int>(e.exponent % 3);
      return is_loop(v) ? Value(loop_prime(loop_of(v), k)) : Value(ring_prime(ring_of(v), k));
    }
    case K::Bracket: {
      const Value l = eval_node(*e.children[0]);
      const Value r = eval_node(*e.children[1]);
      if (!is_loop(l) || !is_loop(r)) {
        throw LinearityError("a bracket needs two loop elements" + at(e), e.position);
      }
      return bracket(loop_of(l), loop_of(r));
    }
  }
  throw SyntaxError("malformed expression", e.position);
}

}  // namespace

std::unique_ptr<Expr> parse(std::string_view input) { return Parser(input).run(); }

Value evaluate(const Expr& expr) { return eval_node(expr); }

Value evaluate(std::string_view input) { return evaluate(*parse(input)); }

std::string render(const Value& value) {
  return std::visit([](const auto& v) { return v.str(); }, value);
}

}  // namespace tetrabox
