#include "tetrabox/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tetrabox {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) {
    coeffs_.push_back(std::move(constant));
  }
}

Poly Poly::monomial(Rational coeff, std::size_t degree) {
  if (coeff.is_zero()) {
    return {};
  }
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::linear_root(const Rational& root) { return Poly(std::vector<Rational>{-root, Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Poly::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::shift(const Rational& shift) const {
  return compose(Poly(std::vector<Rational>{shift, Rational(1)}));
}

Poly Poly::mul_t_pow(std::size_t n) const {
  if (is_zero() || n == 0) {
    return *this;
  }
  std::vector<Rational> c(n);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(c));
}

Poly Poly::pow(std::size_t exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

std::pair<Poly, Rational> Poly::divide_linear(const Rational& root) const {
  if (coeffs_.empty()) {
    return {Poly{}, Rational(0)};
  }
  // Synthetic division, top coefficient down.
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) {
      q[k - 1] = carry;
    }
  }
  return {Poly(std::move(q)), carry};
}

Poly Poly::div_t_pow(std::size_t n) const {
  if (n == 0) {
    return *this;
  }
  if (n >= coeffs_.size()) {
    return {};
  }
  return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.end()));
}

Poly Poly::truncate(std::size_t n) const {
  if (n >= coeffs_.size()) {
    return *this;
  }
  return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) {
    c *= rhs;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

std::string Poly::str(const std::string& var) const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) {
      continue;
    }
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) {
        os << '-';
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) {
      os << mag.str() << '*';
    }
    os << var;
    if (k > 1) {
      os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace tetrabox
