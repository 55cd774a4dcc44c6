#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fourgeo/algebra/rational.hpp"

namespace fourgeo {

/// Laurent polynomial in t with integer coefficients. Only nonzero terms are
/// stored, keyed by exponent, so the representation is canonical.
class LaurentPoly {
 public:
  using Terms = std::map<long, Integer>;

  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

  static LaurentPoly monomial(const Integer& coefficient, long exponent);
  /// {exponent, coefficient} pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(std::initializer_list<std::pair<long, long>> terms);

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(long exponent) const;

  /// Precondition for the four accessors below: nonzero.
  long min_exponent() const;
  long max_exponent() const;
  const Integer& leading_coefficient() const;
  const Integer& trailing_coefficient() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Total order on canonical forms, for sorting and collision detection.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// t -> t^k for k != 0.
  LaurentPoly substitute_power(long k) const;
  LaurentPoly substitute_square() const { return substitute_power(2); }
  /// Multiply by t^s.
  LaurentPoly shifted(long s) const;
  /// t -> t^-1.
  LaurentPoly mirrored() const { return substitute_power(-1); }

  Integer eval_at_one() const;
  bool is_symmetric() const { return *this == mirrored(); }

  /// Quotient when `divisor` divides this exactly in Z[t, t^-1]; nullopt
  /// otherwise. Cost scales with the divisor's term count, not its span.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Descending exponents, e.g. "t^2 - 1 + t^-2".
  std::string to_string(std::string_view var = "t") const;

 private:
  void add_term(long exponent, const Integer& coefficient);
  Terms terms_;
};

/// True iff a(t) = a(1/t) and the extreme coefficients are +-1.
/// Throws for the zero polynomial.
bool is_monic_symmetric(const LaurentPoly& a);

}  // namespace fourgeo
