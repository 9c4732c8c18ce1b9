#include "tetrabox/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetrabox {

namespace {

Poly t_minus_one() { return Poly::linear_root(Rational(1)); }

Poly t_minus_one_pow(unsigned n) { return t_minus_one().pow(n); }

int mod3(int k) { return ((k % 3) + 3) % 3; }

// Horner evaluation of a polynomial at a ring element.
RingElem eval_at(const Poly& p, const RingElem& x) {
  RingElem acc;
  auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += RingElem(*it);
  }
  return acc;
}

Poly from_sparse(const std::map<unsigned, Rational>& part) {
  if (part.empty()) {
    return {};
  }
  std::vector<Rational> c(part.rbegin()->first + 1);
  for (const auto& [deg, value] : part) {
    c[deg] = value;
  }
  return Poly(std::move(c));
}

void accumulate(std::map<unsigned, Rational>& part, unsigned deg, const Rational& value) {
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = part.emplace(deg, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      part.erase(it);
    }
  }
}

// First `order` coefficients of the power series of (t - 1)^(-n) about t = 0.
Poly inverse_tm1_series(unsigned n, unsigned order) {
  std::vector<Rational> c(order);
  Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  for (unsigned k = 0; k < order; ++k) {
    c[k] = n == 0 ? Rational(k == 0 ? 1 : 0) : sign * Rational::binomial(k + n - 1, n - 1);
  }
  return Poly(std::move(c));
}

// First `order` coefficients of (1 + s)^(-n) about s = 0.
Poly inverse_1ps_series(unsigned n, unsigned order) {
  std::vector<Rational> c(order);
  for (unsigned k = 0; k < order; ++k) {
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    c[k] = n == 0 ? Rational(k == 0 ? 1 : 0) : sign * Rational::binomial(k + n - 1, n - 1);
  }
  return Poly(std::move(c));
}

}  // namespace

RingElem::RingElem(Rational constant) : num_(std::move(constant)) {}

RingElem::RingElem(Poly numerator) : num_(std::move(numerator)) {}

RingElem::RingElem(Poly numerator, unsigned pow_t, unsigned pow_tm1)
    : num_(std::move(numerator)), pow_t_(pow_t), pow_tm1_(pow_tm1) {
  normalize();
}

RingElem RingElem::t() { return RingElem(Poly::monomial(Rational(1), 1)); }

RingElem RingElem::t_inv() { return RingElem(Poly(Rational(1)), 1, 0); }

RingElem RingElem::tm1_inv() { return RingElem(Poly(Rational(1)), 0, 1); }

void RingElem::normalize() {
  if (num_.is_zero()) {
    pow_t_ = 0;
    pow_tm1_ = 0;
    return;
  }
  unsigned low = 0;
  while (low < pow_t_ && num_.coeff(low).is_zero()) {
    ++low;
  }
  if (low > 0) {
    num_ = num_.div_t_pow(low);
    pow_t_ -= low;
  }
  while (pow_tm1_ > 0) {
    auto [quotient, remainder] = num_.divide_linear(Rational(1));
    if (!remainder.is_zero()) {
      break;
    }
    num_ = std::move(quotient);
    --pow_tm1_;
  }
}

std::optional<RingElem> RingElem::inverse() const {
  if (num_.is_zero()) {
    return std::nullopt;
  }
  // Peel t and (t-1) off the numerator; a unit leaves a constant c behind.
  unsigned i = 0;
  while (num_.coeff(i).is_zero()) {
    ++i;
  }
  Poly rest = num_.div_t_pow(i);
  unsigned j = 0;
  for (;;) {
    auto [quotient, remainder] = rest.divide_linear(Rational(1));
    if (!remainder.is_zero()) {
      break;
    }
    rest = std::move(quotient);
    ++j;
  }
  if (!rest.is_constant()) {
    return std::nullopt;
  }
  // t^a (t-1)^b / (c t^i (t-1)^j).
  Poly p = (t_minus_one_pow(pow_tm1_) * (Rational(1) / rest.coeff(0))).mul_t_pow(pow_t_);
  return RingElem(std::move(p), i, j);
}

RingElem RingElem::pow(long exponent) const {
  if (exponent < 0) {
    auto inv = inverse();
    if (!inv) {
      throw std::domain_error("negative power of a non-unit of A: " + str());
    }
    return inv->pow(-exponent);
  }
  RingElem result(Rational(1));
  RingElem base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) {
      result *= base;
    }
    e >>= 1UL;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

Rational RingElem::eval(const Rational& at) const {
  Rational den = at.pow(pow_t_) * (at - Rational(1)).pow(pow_tm1_);
  return num_.eval(at) / den;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  unsigned a = std::max(pow_t_, rhs.pow_t_);
  unsigned b = std::max(pow_tm1_, rhs.pow_tm1_);
  Poly lhs_num = (num_ * t_minus_one_pow(b - pow_tm1_)).mul_t_pow(a - pow_t_);
  Poly rhs_num = (rhs.num_ * t_minus_one_pow(b - rhs.pow_tm1_)).mul_t_pow(a - rhs.pow_t_);
  num_ = lhs_num + rhs_num;
  pow_t_ = a;
  pow_tm1_ = b;
  normalize();
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) { return *this += -rhs; }

RingElem& RingElem::operator*=(const RingElem& rhs) {
  num_ *= rhs.num_;
  pow_t_ += rhs.pow_t_;
  pow_tm1_ += rhs.pow_tm1_;
  normalize();
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RingElem::str() const {
  std::string num = num_.str();
  if (is_polynomial()) {
    return num;
  }
  if (num.find_first_of(" /") != std::string::npos) {
    num = "(" + num + ")";
  }
  std::vector<std::string> factors;
  if (pow_t_ > 0) {
    factors.push_back(pow_t_ == 1 ? "t" : "t^" + std::to_string(pow_t_));
  }
  if (pow_tm1_ > 0) {
    factors.push_back(pow_tm1_ == 1 ? "(t - 1)" : "(t - 1)^" + std::to_string(pow_tm1_));
  }
  if (factors.size() == 1) {
    return num + "/" + factors[0];
  }
  return num + "/(" + factors[0] + "*" + factors[1] + ")";
}

RingElem ring_add(const RingElem& a, const RingElem& b) { return a + b; }

RingElem ring_mul(const RingElem& a, const RingElem& b) { return a * b; }

RingElem ring_prime(const RingElem& a, int k) {
  k = mod3(k);
  if (k == 0 || a.is_zero()) {
    return a;
  }
  if (k == 2) {
    return ring_prime(ring_prime(a, 1), 1);
  }
  // num(t)/(t^a (t-1)^b) under t -> (t-1)/t becomes
  // (-1)^b * sum_k n_k (t-1)^k t^(d-k) / (t^(d-a-b) (t-1)^a), d = deg num.
  const Poly& num = a.num();
  auto d = static_cast<unsigned>(num.degree());
  Poly tm1_power(Rational(1));
  Poly rewritten;
  for (unsigned k2 = 0; k2 <= d; ++k2) {
    const Rational c = num.coeff(k2);
    if (!c.is_zero()) {
      rewritten += (tm1_power * c).mul_t_pow(d - k2);
    }
    tm1_power *= t_minus_one();
  }
  if (a.pow_tm1() % 2 == 1) {
    rewritten = -rewritten;
  }
  long t_exp = static_cast<long>(d) - static_cast<long>(a.pow_t()) - static_cast<long>(a.pow_tm1());
  if (t_exp < 0) {
    return RingElem(rewritten.mul_t_pow(static_cast<std::size_t>(-t_exp)), 0, a.pow_t());
  }
  return RingElem(std::move(rewritten), static_cast<unsigned>(t_exp), a.pow_t());
}

CanonExpansion canon_expand(const RingElem& r) {
  CanonExpansion out;
  if (r.is_zero()) {
    return out;
  }
  const Poly& n = r.num();
  const unsigned a = r.pow_t();
  const unsigned b = r.pow_tm1();

  // Principal part at t = 0: first `a` Taylor coefficients of n(t) / (t-1)^b.
  Poly at_zero = (n.truncate(a) * inverse_tm1_series(b, a)).truncate(a);
  // Principal part at t = 1, in s = t - 1: first `b` coefficients of n(s+1) / (s+1)^a.
  Poly at_one = (n.shift(Rational(1)).truncate(b) * inverse_1ps_series(a, b)).truncate(b);

  Poly rest = n - t_minus_one_pow(b) * at_zero - at_one.compose(t_minus_one()).mul_t_pow(a);
  for (unsigned i = 0; i < a; ++i) {
    if (!rest.coeff(i).is_zero()) {
      throw std::logic_error("canon_expand: residual not divisible by t^a");
    }
  }
  Poly poly_part = rest.div_t_pow(a);
  for (unsigned j = 0; j < b; ++j) {
    auto [q, rem] = poly_part.divide_linear(Rational(1));
    if (!rem.is_zero()) {
      throw std::logic_error("canon_expand: residual not divisible by (t-1)^b");
    }
    poly_part = std::move(q);
  }

  out.c0 = poly_part.coeff(0);
  for (long i = 1; i <= poly_part.degree(); ++i) {
    accumulate(out.t_part, static_cast<unsigned>(i), poly_part.coeff(static_cast<std::size_t>(i)));
  }
  // t^-i = (1 - t')^i.
  for (unsigned i = 1; i <= a; ++i) {
    const Rational alpha = at_zero.coeff(a - i);
    if (alpha.is_zero()) {
      continue;
    }
    out.c0 += alpha;
    for (unsigned m = 1; m <= i; ++m) {
      Rational term = alpha * Rational::binomial(i, m);
      accumulate(out.tp_part, m, m % 2 == 0 ? term : -term);
    }
  }
  // (t-1)^-j = (-t'')^j.
  for (unsigned j = 1; j <= b; ++j) {
    const Rational beta = at_one.coeff(b - j);
    accumulate(out.tpp_part, j, j % 2 == 0 ? beta : -beta);
  }
  return out;
}

RingElem reassemble(const CanonExpansion& e) {
  const RingElem t = RingElem::t();
  RingElem out(e.c0);
  out += eval_at(from_sparse(e.t_part), t);
  out += eval_at(from_sparse(e.tp_part), ring_prime(t, 1));
  out += eval_at(from_sparse(e.tpp_part), ring_prime(t, 2));
  return out;
}

bool in_poly_subspace(const RingElem& a, int level, PolyShape shape) {
  RingElem pulled = ring_prime(a, 3 - mod3(level));
  if (!pulled.is_polynomial()) {
    return false;
  }
  switch (shape) {
    case PolyShape::Full:
      return true;
    case PolyShape::VanishAtOne:
      return pulled.num().eval(Rational(1)).is_zero();
    case PolyShape::VanishAtZero:
      return pulled.num().coeff(0).is_zero();
  }
  return false;
}

std::array<RingElem, 3> split_frame(const RingElem& a, int frame) {
  const CanonExpansion e = canon_expand(a);
  const Poly in_t = from_sparse(e.t_part);
  const Poly in_tp = from_sparse(e.tp_part);
  const Poly in_tpp = from_sparse(e.tpp_part);
  const RingElem t = RingElem::t();
  const RingElem tp = ring_prime(t, 1);
  const RingElem tpp = ring_prime(t, 2);
  const Rational one(1);

  // The summand owning the constants absorbs the value of the shifted part at 1,
  // which makes the shifted part divisible by (1 - s).
  switch (mod3(frame)) {
    case 0: {
      const Rational shift = in_tp.eval(one);
      return {RingElem(e.c0 + shift) + eval_at(in_t, t), eval_at(in_tp, tp) - RingElem(shift),
              eval_at(in_tpp, tpp)};
    }
    case 1: {
      const Rational shift = in_tpp.eval(one);
      return {RingElem(e.c0 + shift) + eval_at(in_tp, tp), eval_at(in_tpp, tpp) - RingElem(shift),
              eval_at(in_t, t)};
    }
    default: {
      const Rational shift = in_t.eval(one);
      return {RingElem(e.c0 + shift) + eval_at(in_tpp, tpp), eval_at(in_t, t) - RingElem(shift),
              eval_at(in_tp, tp)};
    }
  }
}

std::pair<int, PolyShape> frame_component_subspace(int frame, int slot) {
  frame = mod3(frame);
  switch (slot) {
    case 0:
      return {frame, PolyShape::Full};
    case 1:
      return {mod3(frame + 1), PolyShape::VanishAtOne};
    case 2:
      return {mod3(frame + 2), PolyShape::VanishAtZero};
    default:
      throw std::out_of_range("split_frame slot must be 0, 1 or 2");
  }
}

}  // namespace tetrabox
