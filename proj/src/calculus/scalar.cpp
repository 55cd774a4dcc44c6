#include "fourgeo/calculus/scalar.hpp"

namespace fourgeo {

const Rational& Scalar::number() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error("expected a number, got polynomial " + std::get<Poly>(value_).to_string());
}

Poly Scalar::as_poly() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Poly(*r);
  return std::get<Poly>(value_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

Scalar Scalar::evaluate(const Rational& n) const {
  if (const auto* p = std::get_if<Poly>(&value_)) return (*p)(n);
  return *this;
}

bool Scalar::is_integer_valued() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_integer();
  return integer_valued(std::get<Poly>(value_));
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return a.number() + b.number();
  return a.as_poly() + b.as_poly();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return a.number() - b.number();
  return a.as_poly() - b.as_poly();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return a.number() * b.number();
  return a.as_poly() * b.as_poly();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error("division by zero");
  if (!b.is_symbolic()) {
    if (!a.is_symbolic()) return a.number() / b.number();
    return a.as_poly() * (Rational(1) / b.number());
  }
  const Poly divisor = b.as_poly();
  if (divisor.is_constant()) return a.as_poly() * (Rational(1) / divisor.leading_coefficient());
  auto q = a.as_poly().divide_exact(divisor);
  if (!q) throw Error("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return *q;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.is_symbolic() && !b.is_symbolic()) return a.number() == b.number();
  return a.as_poly() == b.as_poly();
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  return std::get<Poly>(value_).to_string();
}

Scalar pow(const Scalar& base, unsigned exponent) {
  if (!base.is_symbolic()) return pow(base.number(), exponent);
  return pow(base.as_poly(), exponent);
}

bool certify_nonnegative(const Scalar& s) {
  if (!s.is_symbolic()) return s.number().sign() >= 0;
  const Poly shifted = s.as_poly().taylor_shift(Rational(kParameterMin));
  for (const auto& c : shifted.coefficients())
    if (c.sign() < 0) return false;
  return true;
}

bool certify_positive(const Scalar& s) {
  if (!s.is_symbolic()) return s.number().sign() > 0;
  return certify_nonnegative(s) && s.as_poly()(Rational(kParameterMin)).sign() > 0;
}

int eventual_sign(const Scalar& s) {
  if (!s.is_symbolic()) return s.number().sign();
  return s.as_poly().leading_coefficient().sign();
}

}  // namespace fourgeo
