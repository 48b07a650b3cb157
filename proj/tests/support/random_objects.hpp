#pragma once

#include "lienorm/rational_function.hpp"

#include <random>

namespace lienorm::testing {

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return ratio(num(rng), den(rng));
}

/// Sparse random polynomial: up to `terms` monomials of total degree <= deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned deg, int terms = 4) {
  auto monos = monomials_up_to(nvars, deg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> count(1, terms);
  std::vector<Term> ts;
  for (int k = count(rng); k > 0; --k) ts.push_back({monos[pick(rng)], random_rational(rng)});
  return Polynomial::from_terms(nvars, std::move(ts));
}

inline RationalFunction random_rational_function(std::mt19937_64& rng, std::size_t nvars, unsigned deg) {
  Polynomial den = random_polynomial(rng, nvars, deg, 3);
  while (den.is_zero()) den = random_polynomial(rng, nvars, deg, 3);
  return RationalFunction(random_polynomial(rng, nvars, deg), den);
}

/// f == g decided by cross-multiplication, independent of gcd reduction.
inline bool same_function(const RationalFunction& f, const RationalFunction& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

}  // namespace lienorm::testing
