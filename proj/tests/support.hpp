#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "fourgeo/algebra/laurent.hpp"
#include "fourgeo/algebra/poly.hpp"

namespace testing {

using fourgeo::LaurentPoly;
using fourgeo::Poly;
using fourgeo::Rational;

/// Polynomial from {"coefficient", power} pairs, e.g. {{"1/3", 7}, {"-2", 3}}.
inline Poly poly(std::initializer_list<std::pair<const char*, unsigned>> terms) {
  Poly p;
  for (const auto& [c, k] : terms) p += Poly::monomial(Rational::parse(c), k);
  return p;
}

/// Fixed seed so every run sees the same cases.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedf00dULL);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 20, long max_den = 6) {
  return Rational(fourgeo::Integer(uniform(-bound, bound)), fourgeo::Integer(uniform(1, max_den)));
}

inline Poly random_poly(int max_degree = 5, long bound = 20, long max_den = 6) {
  Poly p;
  const int deg = static_cast<int>(uniform(-1, max_degree));
  for (int k = 0; k <= deg; ++k) p += Poly::monomial(random_rational(bound, max_den), k);
  return p;
}

inline LaurentPoly random_laurent(int max_terms = 6, long span = 8, long bound = 9) {
  LaurentPoly p;
  const int terms = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(fourgeo::Integer(uniform(-bound, bound)), uniform(-span, span));
  return p;
}

/// Alexander polynomial of torus(2, 2g+1) written out term by term:
/// sum over |i| <= g of (-1)^(g - i) t^i.
inline LaurentPoly two_strand_torus_alexander(long g) {
  LaurentPoly p;
  for (long i = -g; i <= g; ++i) p += LaurentPoly::monomial((g - i) % 2 == 0 ? 1 : -1, i);
  return p;
}

}  // namespace testing
