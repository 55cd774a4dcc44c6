#include "fourgeo/algebra/poly.hpp"

#include <algorithm>

namespace fourgeo {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& coefficient, unsigned power) {
  if (coefficient.is_zero()) return {};
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Poly::leading_coefficient() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Poly remainder = *this;
  if (degree() < divisor.degree()) return {Poly(), remainder};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Rational lead = divisor.leading_coefficient();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    auto shift = static_cast<unsigned>(remainder.degree() - divisor.degree());
    Rational factor = remainder.leading_coefficient() / lead;
    quot[shift] = factor;
    remainder -= monomial(factor, shift) * divisor;
  }
  return {Poly(std::move(quot)), remainder};
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly Poly::taylor_shift(const Rational& a) const {
  // Horner in the ring: acc = acc * (n + a) + c.
  const Poly step = variable() + Poly(a);
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Poly(*it);
  return acc;
}

Integer Poly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = negative ? -c : c;
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(Rational(1));
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool integer_valued(const Poly& p) {
  if (p.is_zero()) return true;
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<Rational> table;
  table.reserve(d + 1);
  for (std::size_t k = 0; k <= d; ++k) table.push_back(p(Rational(static_cast<long>(k))));
  // After pass j, table[j] holds the j-th forward difference at 0.
  for (std::size_t j = 0; j <= d; ++j) {
    if (!table[j].is_integer()) return false;
    for (std::size_t i = d; i > j; --i) table[i] = table[i] - table[i - 1];
  }
  return true;
}

}  // namespace fourgeo
