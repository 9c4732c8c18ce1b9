#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tetrabox/loop.hpp"
#include "tetrabox/ring.hpp"

namespace tetrabox {

class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  /// Byte offset into the input where the problem was detected.
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed input.
class SyntaxError : public ExprError {
 public:
  using ExprError::ExprError;
};

/// Division by something that is not a unit of A, or a negative power of a non-unit.
class DomainError : public ExprError {
 public:
  using ExprError::ExprError;
};

/// x, y, z used nonlinearly, or ring and loop values mixed in a sum.
class LinearityError : public ExprError {
 public:
  using ExprError::ExprError;
};

/// Syntax tree. Leaves carry a literal or a name; inner nodes an operator.
struct Expr {
  enum class Kind {
    Number,   // text holds the digits
    Symbol,   // t, x, y, z or a named constant
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,      // exponent in `exponent`
    Prime,    // count in `exponent`
    Bracket,
  };

  Kind kind = Kind::Number;
  std::string text;
  long exponent = 0;
  std::size_t position = 0;
  std::vector<std::unique_ptr<Expr>> children;
};

using Value = std::variant<RingElem, LoopElem>;

std::unique_ptr<Expr> parse(std::string_view input);
Value evaluate(const Expr& expr);
/// parse followed by evaluate.
Value evaluate(std::string_view input);

/// Normal-form rendering; parses back to the same value.
std::string render(const Value& value);

}  // namespace tetrabox
