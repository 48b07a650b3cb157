#pragma once

#include "lienorm/rational.hpp"
#include "lienorm/rational_function.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lienorm {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QVector = std::vector<Rational>;
using QMatrix = Matrix<Rational>;
using FVector = std::vector<RationalFunction>;
using FMatrix = Matrix<RationalFunction>;

QMatrix identity_matrix(std::size_t n);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& c, const QMatrix& a);
QVector operator*(const QMatrix& a, const QVector& v);
Rational trace(const QMatrix& a);
bool is_zero(const QMatrix& a);
bool is_zero(const QVector& v);
QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
/// Flattens row-major.
QVector flatten(const QMatrix& a);
QMatrix unflatten(const QVector& v, std::size_t rows, std::size_t cols);

/// Reduced row echelon form with pivot columns.
struct Echelon {
  QMatrix reduced;  ///< only the first pivots.size() rows are nonzero
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan over Q. Pivot: leftmost column with a nonzero entry, then the
/// row holding the canonically smallest entry in that column.
Echelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column in ascending order.
std::vector<QVector> nullspace(const QMatrix& m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);

struct LinearSolution {
  std::optional<QVector> particular;  ///< free variables set to zero
  std::vector<QVector> nullspace;
};
LinearSolution solve_linear(const QMatrix& a, const QVector& b);

/// Rank over Q(x) by fraction-free (Bareiss) elimination on the row-wise
/// cleared numerators.
std::size_t rank(const FMatrix& m);

struct FLinearSolution {
  std::optional<FVector> particular;
  std::vector<FVector> nullspace;
};
/// Gauss-Jordan over Q(x); same pivot rule with the canonical size order on
/// rational functions.
FLinearSolution solve_linear(const FMatrix& a, const FVector& b);
RationalFunction determinant(const FMatrix& m);

/// Subspace of Q^n stored by its reduced echelon basis, so equal subspaces
/// have identical representations.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_whole() const { return basis_.size() == ambient_; }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns that are not pivots; the standard vectors there span a complement.
  std::vector<std::size_t> complement_indices() const;

  /// v minus its component along the basis; zero at every pivot column.
  QVector reduce(const QVector& v) const;
  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed inside) with respect to basis().
  QVector coordinates(const QVector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {x : <x, s> = 0 for all s in this}.
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
  std::size_t ambient_;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Coefficients c_0..c_n of det(t I - a) (c_n = 1), by Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const QMatrix& a);
/// Distinct rational roots in ascending order (rational root test).
std::vector<Rational> rational_roots(std::vector<Rational> coefficients);
std::vector<Rational> rational_eigenvalues(const QMatrix& a);
/// Basis of {X : X M = M X for every M}.
std::vector<QMatrix> commutant(std::span<const QMatrix> matrices, std::size_t d);

QVector unit_vector(std::size_t n, std::size_t i);
std::string to_string(const QVector& v);

// ---------------------------------------------------------------------------
// Q-linear algebra on families of rational-function vectors. Identities are
// decided by bringing everything to a common denominator and matching
// monomial coefficients, never by sampling.

/// Rows indexed by (component, monomial), columns by family member.
QMatrix constant_coefficient_matrix(std::span<const FVector> family);
/// Q-linear relations: basis of {c : sum_i c_i F_i = 0}.
std::vector<QVector> constant_relations(std::span<const FVector> family);
std::size_t constant_rank(std::span<const FVector> family);
/// c with sum_i c_i F_i = target, or nullopt.
std::optional<QVector> express_in_constant_span(std::span<const FVector> family, const FVector& target);

Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace lienorm
