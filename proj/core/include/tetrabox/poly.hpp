#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tetrabox/rational.hpp"

namespace tetrabox {

/// Dense univariate polynomial over Rational, coefficients stored lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients
/// and equality is coefficient-wise.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)

  /// c * t^n
  static Poly monomial(Rational coeff, std::size_t degree);
  /// t - root
  static Poly linear_root(const Rational& root);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of a nonzero polynomial; -1 for zero.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coeff(std::size_t degree) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }

  [[nodiscard]] Rational eval(const Rational& at) const;

  /// p(q(t)).
  [[nodiscard]] Poly compose(const Poly& inner) const;
  /// p(t + shift).
  [[nodiscard]] Poly shift(const Rational& shift) const;
  /// Multiplies by t^n.
  [[nodiscard]] Poly mul_t_pow(std::size_t n) const;
  [[nodiscard]] Poly pow(std::size_t exponent) const;

  /// Divides by (t - root); returns (quotient, remainder).
  [[nodiscard]] std::pair<Poly, Rational> divide_linear(const Rational& root) const;
  /// Drops the lowest n coefficients' slots; caller guarantees they are zero.
  [[nodiscard]] Poly div_t_pow(std::size_t n) const;
  /// Keeps coefficients of degree < n.
  [[nodiscard]] Poly truncate(std::size_t n) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Descending-degree rendering in t, e.g. "2*t^2 - 3/2*t + 1".
  [[nodiscard]] std::string str(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace tetrabox
