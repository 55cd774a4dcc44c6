#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fourgeo {

using Integer = mpz_class;

/// Raised for any violated precondition of the calculus: bad arguments,
/// inconsistent data, or non-exact divisions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading '-').
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Numerator of an integral value; throws if not integral.
  Integer to_integer() const;
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

/// Decimal rendering with `places` fractional digits, rounding half to even.
std::string to_decimal(const Rational& value, unsigned places);

}  // namespace fourgeo
