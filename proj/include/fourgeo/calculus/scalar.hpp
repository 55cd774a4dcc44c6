#pragma once

#include <string>
#include <variant>

#include "fourgeo/algebra/poly.hpp"
#include "fourgeo/algebra/rational.hpp"

namespace fourgeo {

/// Smallest construction parameter the symbolic calculus reasons about.
/// Symbolic preconditions ("nonnegative", "positive") are certified on n >= 2.
inline constexpr long kParameterMin = 2;

/// Exact quantity that is either a number or a polynomial in n.
///
/// Arithmetic promotes a Rational operand to a constant polynomial when the
/// other side is symbolic. Equality compares values, so a constant Poly
/// equals the Rational with the same value.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& value) : value_(value) {}
  Scalar(long value) : value_(Rational(value)) {}
  Scalar(const Poly& value) : value_(value) {}

  /// The symbolic parameter n.
  static Scalar parameter() { return Scalar(Poly::variable()); }

  bool is_symbolic() const { return std::holds_alternative<Poly>(value_); }
  /// Throws if symbolic.
  const Rational& number() const;
  Poly as_poly() const;

  bool is_zero() const;
  /// Substitute n; identity on numbers.
  Scalar evaluate(const Rational& n) const;
  /// Integral value for numbers; integer-valued polynomial otherwise.
  bool is_integer_valued() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Exact quotient: division by a number, or polynomial division with zero
  /// remainder. Throws otherwise.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, Poly> value_;
};

Scalar pow(const Scalar& base, unsigned exponent);

/// Exact certificate that s >= 0 for every admissible n (n >= kParameterMin
/// when symbolic): all coefficients of s(n + 2) are nonnegative. Sound but
/// not complete for symbolic values.
bool certify_nonnegative(const Scalar& s);
/// As above with s(2) > 0, hence s > 0 on the whole domain.
bool certify_positive(const Scalar& s);

/// Sign of s for large n (sign of the leading coefficient); sign for numbers.
int eventual_sign(const Scalar& s);

}  // namespace fourgeo
