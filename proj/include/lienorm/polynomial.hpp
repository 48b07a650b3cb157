#pragma once

#include "lienorm/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lienorm {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector x1^a1 ... xn^an. Unused trailing slots stay zero, so
/// monomials over different variable counts compare consistently.
class Monomial {
public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); exponents subtract.
  Monomial quotient(const Monomial& divisor) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... > xn.
bool grlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted ascending in
/// grlex order with no zero coefficients; the leading term is the last one.
class Polynomial {
public:
  explicit Polynomial(std::size_t nvars = 0);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, const Monomial& m, const Rational& c = 1);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coeff; }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Smallest total degree of a term; -1 for zero.
  int min_degree() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Coefficient of x_var^d with x_var removed; same variable count.
  Polynomial coefficient_in(std::size_t var, unsigned d) const;
  Polynomial leading_coefficient_in(std::size_t var) const;
  Polynomial homogeneous_part(unsigned d) const;
  /// Drops every term of total degree > max_degree.
  Polynomial truncated(unsigned max_degree) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes constants for some variables; nullopt entries are kept.
  Polynomial partial_evaluate(std::span<const std::optional<Rational>> values) const;
  /// Dense coefficient list in var (index = power) after all other variables
  /// were evaluated; requires a polynomial involving only var.
  std::vector<Rational> dense_univariate(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;

  /// Expression-grammar rendering, e.g. "x^2*y - 3/2*x + 1".
  std::string to_string(std::span<const std::string> names) const;

private:
  void normalize();

  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Quotient when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Scales so the grlex-leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& p);

/// Monic greatest common divisor. Recursive content/primitive-part scheme with
/// a subresultant remainder sequence in one main variable. Univariate images
/// under integer specializations bound the gcd degree in each variable and
/// let coprime or variable-free cases return early.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Content with respect to var: gcd of the coefficients of a in x_var.
Polynomial content_in(const Polynomial& a, std::size_t var);

/// Pseudo-remainder prem(a, b) in x_var: lc(b)^(deg a - deg b + 1) a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// All monomials in nvars variables of total degree exactly d (grlex ascending).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);
/// All monomials of total degree <= d (grlex ascending).
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

}  // namespace lienorm
