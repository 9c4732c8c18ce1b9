#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tetrabox/poly.hpp"
#include "tetrabox/rational.hpp"

namespace tetrabox {

/// Element of the coefficient ring A = F[t, 1/t, 1/(t-1)].
///
/// Stored as num(t) / (t^a (t-1)^b) with num coprime to t (when a > 0) and to
/// t-1 (when b > 0); zero is (0, 0, 0). The representation is canonical, so
/// structural equality coincides with equality in A.
class RingElem {
 public:
  RingElem() = default;
  RingElem(Rational constant);  // NOLINT(google-explicit-constructor)
  RingElem(long constant) : RingElem(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit RingElem(Poly numerator);
  /// numerator / (t^pow_t (t-1)^pow_tm1), reduced on construction.
  RingElem(Poly numerator, unsigned pow_t, unsigned pow_tm1);

  static RingElem t();
  static RingElem t_inv();
  static RingElem tm1_inv();

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] unsigned pow_t() const { return pow_t_; }
  [[nodiscard]] unsigned pow_tm1() const { return pow_tm1_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return pow_t_ == 0 && pow_tm1_ == 0; }
  /// Units of A are c * t^i * (t-1)^j with i, j of either sign.
  [[nodiscard]] bool is_unit() const { return inverse().has_value(); }

  [[nodiscard]] std::optional<RingElem> inverse() const;
  /// Integer power; throws std::domain_error for negative powers of non-units.
  [[nodiscard]] RingElem pow(long exponent) const;

  /// Value at a rational point outside {0, 1}.
  [[nodiscard]] Rational eval(const Rational& at) const;

  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);

  friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
  friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }
  friend RingElem operator*(RingElem lhs, const RingElem& rhs) { return lhs *= rhs; }
  RingElem operator-() const;

  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// Normal form, e.g. "(2*t^2 + 1)/(t^1*(t-1)^2)"; polynomials render bare.
  [[nodiscard]] std::string str() const;

 private:
  void normalize();

  Poly num_;
  unsigned pow_t_ = 0;
  unsigned pow_tm1_ = 0;
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);

/// Applies the order-three automorphism t -> 1 - 1/t exactly (k mod 3) times.
RingElem ring_prime(const RingElem& a, int k = 1);

/// Coordinates of an element of A in the basis {1} u {t^i, (t')^i, (t'')^i : i >= 1}.
struct CanonExpansion {
  Rational c0;
  std::map<unsigned, Rational> t_part;
  std::map<unsigned, Rational> tp_part;
  std::map<unsigned, Rational> tpp_part;

  friend bool operator==(const CanonExpansion&, const CanonExpansion&) = default;
};

CanonExpansion canon_expand(const RingElem& a);
RingElem reassemble(const CanonExpansion& e);

/// Shapes of the polynomial subspaces used by the three direct-sum splittings of A,
/// always relative to one of the variables t, t', t''.
enum class PolyShape : std::uint8_t {
  Full,          // F[s]
  VanishAtOne,   // (1 - s) F[s]
  VanishAtZero,  // s F[s]
};

/// True iff a lies in the subspace of the given shape in the variable s = t^(level primes).
bool in_poly_subspace(const RingElem& a, int level, PolyShape shape);

/// Unique decomposition a = first + second + third along
///   frame 0: F[t]   + (1-t')F[t']   + t''F[t'']
///   frame 1: F[t']  + (1-t'')F[t''] + tF[t]
///   frame 2: F[t''] + (1-t)F[t]     + t'F[t']
std::array<RingElem, 3> split_frame(const RingElem& a, int frame);

/// Subspace (variable level, shape) occupied by component `slot` of split_frame(., frame).
std::pair<int, PolyShape> frame_component_subspace(int frame, int slot);

}  // namespace tetrabox
