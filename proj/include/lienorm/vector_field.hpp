#pragma once

#include "lienorm/linalg.hpp"
#include "lienorm/rational_function.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lienorm {

/// Coordinate chart: an ordered list of variable names.
class Chart {
public:
  Chart() = default;
  explicit Chart(std::vector<std::string> variables);
  /// x1..xn.
  static Chart standard(std::size_t n);

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  bool operator==(const Chart& o) const { return names_ == o.names_; }

  RationalFunction parse(std::string_view text) const;
  RationalFunction coordinate(std::size_t i) const { return RationalFunction::variable(dimension(), i); }

private:
  std::vector<std::string> names_;
};

/// Throws ChartMismatch unless a == b.
void require_same_chart(const Chart& a, const Chart& b);

/// sum_j v_j d/dx_j with rational-function coefficients.
class VectorField {
public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<RationalFunction> coefficients);
  static VectorField zero(const Chart& chart);
  /// d/dx_i.
  static VectorField partial(const Chart& chart, std::size_t i);
  static VectorField parse(const Chart& chart, std::span<const std::string> coefficients);

  const Chart& chart() const { return chart_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const RationalFunction& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_polynomial() const;
  /// Highest total degree of a numerator when every coefficient is polynomial; -1 for zero.
  int polynomial_degree() const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Rational& c, const VectorField& v);
  friend VectorField operator*(const RationalFunction& f, const VectorField& v);
  bool operator==(const VectorField& o) const { return chart_ == o.chart_ && coeffs_ == o.coeffs_; }

  /// Coefficient values at a point; nullopt when a denominator vanishes there.
  std::optional<QVector> evaluate(std::span<const Rational> point) const;

  std::vector<std::string> to_strings() const;

private:
  Chart chart_;
  std::vector<RationalFunction> coeffs_;
};

/// [v, w]_j = v(w_j) - w(v_j).
VectorField bracket(const VectorField& v, const VectorField& w);
/// v(f) = sum_j v_j df/dx_j.
RationalFunction apply(const VectorField& v, const RationalFunction& f);

/// Order of vanishing at the origin: smallest total degree of a nonzero Taylor
/// term. nullopt stands for an infinite order (v = 0). Throws DomainError when
/// a denominator vanishes at 0.
std::optional<unsigned> order_at_origin(const VectorField& v);

/// Pullback of v (on the target of tau) along tau: (D tau)^{-1} (v o tau).
/// tau lists the target coordinates as functions on `source`.
VectorField pullback(const VectorField& v, const Chart& source, std::span<const RationalFunction> tau);

/// Translates so that `point` becomes the origin: x -> x + point.
VectorField recenter(const VectorField& v, std::span<const Rational> point);

/// Sorted index set of a multivector component.
using IndexSet = std::vector<std::size_t>;

/// Homogeneous degree-k multivector sum_I f_I d_I over sorted index sets I.
class MultiVector {
public:
  MultiVector(Chart chart, std::size_t degree);

  const Chart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  /// Coefficient of d_I for sorted I; zero when absent.
  RationalFunction component(const IndexSet& indices) const;
  const std::map<IndexSet, RationalFunction>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Adds f * d_{i1} ^ ... ^ d_{ik} for an arbitrary index list (sorted with sign).
  void add(const RationalFunction& f, IndexSet indices);

  friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator*(const RationalFunction& f, const MultiVector& m);
  bool operator==(const MultiVector& o) const {
    return chart_ == o.chart_ && degree_ == o.degree_ && comps_ == o.comps_;
  }

private:
  Chart chart_;
  std::size_t degree_;
  std::map<IndexSet, RationalFunction> comps_;
};

/// v1 ^ ... ^ vk; components are the k x k minors of the coefficient matrix.
MultiVector wedge(std::span<const VectorField> fields);
/// Lie derivative, extended to wedge products by the Leibniz rule.
MultiVector lie_derivative(const VectorField& v, const MultiVector& theta);

/// Vector field whose coefficients are polynomials truncated above total
/// degree `order`.
class JetField {
public:
  JetField() = default;
  JetField(Chart chart, unsigned order, std::vector<Polynomial> coefficients);
  static JetField zero(const Chart& chart, unsigned order);

  const Chart& chart() const { return chart_; }
  unsigned order() const { return order_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Values at the origin.
  QVector value_at_origin() const;
  /// Degree-d homogeneous parts of the coefficients.
  std::vector<Polynomial> homogeneous_part(unsigned d) const;
  /// Same coefficients, lower order (extra terms dropped).
  JetField truncated(unsigned order) const;
  VectorField to_field() const;

  friend JetField operator+(const JetField& a, const JetField& b);
  friend JetField operator-(const JetField& a, const JetField& b);
  friend JetField operator*(const Rational& c, const JetField& v);
  bool operator==(const JetField& o) const {
    return chart_ == o.chart_ && order_ == o.order_ && coeffs_ == o.coeffs_;
  }

private:
  Chart chart_;
  unsigned order_ = 0;
  std::vector<Polynomial> coeffs_;
};

/// Taylor expansion through total degree k. Throws DomainError when a
/// denominator vanishes at the origin.
JetField truncate(const VectorField& v, unsigned k);
/// Bracket of order-k jets; only degrees <= k - 1 are determined, so the
/// result has order k - 1 (order 0 stays 0).
JetField bracket(const JetField& v, const JetField& w);
std::optional<unsigned> order_at_origin(const JetField& v);

}  // namespace lienorm
