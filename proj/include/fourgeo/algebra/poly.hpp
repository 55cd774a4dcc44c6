#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourgeo/algebra/rational.hpp"

namespace fourgeo {

/// Univariate polynomial over Q in the construction parameter n.
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// zero polynomial is the empty vector and equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);
  Poly(long constant) : Poly(Rational(constant)) {}
  explicit Poly(std::vector<Rational> coefficients);

  /// The parameter n itself.
  static Poly variable();
  static Poly monomial(const Rational& coefficient, unsigned power);

  std::span<const Rational> coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coefficient(unsigned power) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
  friend Poly operator*(const Rational& a, Poly b) { return b *= a; }
  friend Poly operator*(Poly a, long b) { return a *= Rational(b); }
  friend Poly operator*(long a, Poly b) { return b *= Rational(a); }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Euclidean division over Q; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Quotient when the remainder is zero.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// p(n + a).
  Poly taylor_shift(const Rational& a) const;

  /// Least common multiple of the coefficient denominators (1 for zero).
  Integer denominator_lcm() const;

  /// Descending powers, e.g. "1/3*n^7 - 4/3*n^5 - 2*n^3 - 14".
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

/// True iff p(k) is an integer for every integer k. Decided through the
/// Newton (binomial) basis: p is integer valued iff every forward difference
/// at 0 up to deg p is integral.
bool integer_valued(const Poly& p);

}  // namespace fourgeo
