#include "fourgeo/algebra/laurent.hpp"

#include <algorithm>
#include <vector>

namespace fourgeo {

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, long exponent) {
  LaurentPoly out;
  out.add_term(exponent, coefficient);
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly out;
  for (const auto& [e, c] : terms) out.add_term(e, Integer(c));
  return out;
}

void LaurentPoly::add_term(long exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const {
  if (is_zero()) throw Error("exponent range undefined for zero");
  return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
  if (is_zero()) throw Error("exponent range undefined for zero");
  return terms_.rbegin()->first;
}

const Integer& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw Error("leading coefficient undefined for zero");
  return terms_.rbegin()->second;
}

const Integer& LaurentPoly::trailing_coefficient() const {
  if (is_zero()) throw Error("trailing coefficient undefined for zero");
  return terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, Integer(-c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long lo = a.min_exponent() + b.min_exponent();
  const long hi = a.max_exponent() + b.max_exponent();
  const std::size_t pairs = a.term_count() * b.term_count();
  if (static_cast<unsigned long>(hi - lo) > 4 * pairs + 64) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Integer(ca * cb));
    return out;
  }
  // Dense accumulation over the exponent window, then sparsify.
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<long>(i), acc[i]);
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return cmp(x.second, y.second) < 0;
      });
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
  if (k == 0) throw Error("substitution t -> t^0 collapses the polynomial");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(long s) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + s, c);
  return out;
}

Integer LaurentPoly::eval_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error("Laurent division by zero");
  if (is_zero()) return LaurentPoly();
  // Normalize both to ordinary polynomials with nonzero constant term; a
  // Laurent quotient exists iff the ordinary one does, up to a monomial.
  const long offset = min_exponent() - divisor.min_exponent();
  LaurentPoly rem = shifted(-min_exponent());
  const LaurentPoly div = divisor.shifted(-divisor.min_exponent());
  const long div_deg = div.max_exponent();
  const Integer& lead = div.leading_coefficient();

  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exponent() >= div_deg) {
    const long shift = rem.max_exponent() - div_deg;
    Integer factor, r;
    mpz_tdiv_qr(factor.get_mpz_t(), r.get_mpz_t(), rem.leading_coefficient().get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    quot.terms_.emplace(shift, factor);
    for (const auto& [e, c] : div.terms_) rem.add_term(e + shift, Integer(-factor * c));
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(offset);
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool is_monic_symmetric(const LaurentPoly& a) {
  if (a.is_zero()) throw Error("monicity undefined for zero");
  return a.is_symmetric() && abs(a.leading_coefficient()) == 1;
}

}  // namespace fourgeo
