#include "fourgeo/algebra/rational.hpp"

#include <cctype>

namespace fourgeo {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error("malformed integer '" + std::string(text) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("malformed integer '" + std::string(text) + "'");
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw Error("expected an integer, got " + to_string());
  return q_.get_num();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

std::string to_decimal(const Rational& value, unsigned places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Integer num = abs(value.numerator()) * scale;
  Integer den = value.denominator();
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int half = cmp(Integer(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

  std::string digits = quot.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = value.sign() < 0 && quot != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

}  // namespace fourgeo
