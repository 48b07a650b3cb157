#pragma once

#include "lienorm/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lienorm {

/// Element of Q(x1..xn) in canonical form: numerator and denominator coprime,
/// denominator monic in grlex order. Two canonical forms are equal iff the
/// functions are equal, so operator== decides rational-function identities.
class RationalFunction {
public:
  explicit RationalFunction(std::size_t nvars = 0);
  RationalFunction(std::size_t nvars, const Rational& c);
  explicit RationalFunction(Polynomial p);
  /// Throws DomainError when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value when constant.
  Rational constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c);
  friend RationalFunction operator*(const Rational& c, const RationalFunction& a) { return a * c; }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction pow(unsigned e) const;

  bool operator==(const RationalFunction& other) const { return num_ == other.num_ && den_ == other.den_; }

  RationalFunction derivative(std::size_t var) const;
  /// nullopt when the denominator vanishes at the point.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;
  /// f(g1, ..., gn); the result lives in the variables of the g's.
  RationalFunction compose(std::span<const RationalFunction> values) const;
  /// Taylor polynomial at the origin through total degree `order`. Throws
  /// DomainError when the denominator vanishes at 0.
  Polynomial taylor(unsigned order) const;

  /// Grammar rendering; "(num)/(den)" when the denominator is not constant.
  std::string to_string(std::span<const std::string> names) const;

private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace lienorm
