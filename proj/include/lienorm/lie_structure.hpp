#pragma once

#include "lienorm/error.hpp"
#include "lienorm/linalg.hpp"
#include "lienorm/vector_field.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lienorm {

/// Bracket table [e_i, e_j] = sum_k c(i, j, k) e_k of an m-dimensional Lie
/// algebra. The constructor checks antisymmetry and the Jacobi identity.
class StructureConstants {
public:
  StructureConstants() = default;
  /// Flat tensor of size m^3 indexed (i * m + j) * m + k. Throws InputError
  /// when antisymmetry or Jacobi fails.
  StructureConstants(std::size_t m, std::vector<Rational> tensor);

  std::size_t dim() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * m_ + j) * m_ + k]; }
  const std::vector<Rational>& tensor() const { return c_; }

  QVector bracket(const QVector& a, const QVector& b) const;
  /// Matrix of ad(x) = [x, .] in the basis: column j holds [x, e_j].
  QMatrix ad(const QVector& x) const;
  QMatrix ad(std::size_t i) const { return ad(unit_vector(m_, i)); }

  bool operator==(const StructureConstants& o) const { return m_ == o.m_ && c_ == o.c_; }

private:
  std::size_t m_ = 0;
  std::vector<Rational> c_;
};

/// Some pairwise bracket leaves the constant span of the basis.
class NotClosed : public InputError {
public:
  NotClosed(std::size_t i, std::size_t j, VectorField offending)
      : InputError("bracket of basis elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                   " is not in the span"),
        i_(i), j_(j), offending_(std::move(offending)) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  const VectorField& offending() const { return offending_; }

private:
  std::size_t i_, j_;
  VectorField offending_;
};

/// The basis fields satisfy a constant-coefficient linear relation.
class NotIndependent : public InputError {
public:
  using InputError::InputError;
};

/// Structure constants of a family of fields; pairwise brackets run in
/// parallel. Throws NotIndependent or NotClosed (lowest offending pair).
StructureConstants structure_constants(std::span<const VectorField> basis);
/// Same result computed one pair at a time.
StructureConstants structure_constants_serial(std::span<const VectorField> basis);

/// A finite-dimensional Lie algebra of vector fields with its bracket table.
class VectorFieldAlgebra {
public:
  VectorFieldAlgebra() = default;
  explicit VectorFieldAlgebra(std::vector<VectorField> basis);

  const Chart& chart() const { return basis_.front().chart(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t chart_dim() const { return chart().dimension(); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const StructureConstants& structure() const { return sc_; }
  /// sum_i x_i e_i.
  VectorField element(const QVector& x) const;

private:
  std::vector<VectorField> basis_;
  StructureConstants sc_;
};

/// Subalgebras and ideals are subspaces of coordinate vectors.
using SubalgebraSpec = Subspace;

bool is_closed(const StructureConstants& s, const Subspace& h);
bool is_ideal(const StructureConstants& s, const Subspace& k);
/// Throws DomainError when h is not closed under the bracket.
void require_closed(const StructureConstants& s, const Subspace& h);

Subspace center(const StructureConstants& s);
/// [g, g].
Subspace derived_algebra(const StructureConstants& s);
/// [a, b] for subspaces.
Subspace bracket_span(const StructureConstants& s, const Subspace& a, const Subspace& b);
/// {v : [v, h] in h}.
Subspace normalizer(const StructureConstants& s, const Subspace& h);
/// {v : [v, a] = 0 for all a in sub}.
Subspace centralizer(const StructureConstants& s, const Subspace& sub);

/// Whether D satisfies D[a,b] = [Da,b] + [a,Db].
bool is_derivation(const StructureConstants& s, const QMatrix& d);
/// Basis of Der(g) from the Leibniz system in the m^2 entries (row-major).
std::vector<QMatrix> derivations(const StructureConstants& s);

struct CompletenessReport {
  bool complete = false;
  std::size_t center_dim = 0;
  std::size_t derivation_dim = 0;
  std::size_t inner_dim = 0;
  /// Why completeness fails; empty when complete.
  std::string reason;
  /// The ad matrices spanning Der(g) when complete, else a non-inner
  /// derivation when one exists.
  std::vector<QMatrix> witness;
};
CompletenessReport is_complete(const StructureConstants& s);

QMatrix killing_form(const StructureConstants& s);
bool is_semisimple(const StructureConstants& s);

/// Largest ideal of g inside h: fixpoint of k -> {v in k : [g, v] in k}.
Subspace largest_ideal_inside(const StructureConstants& s, const Subspace& h);

/// Bracket table of a closed subspace in its echelon basis.
StructureConstants subalgebra_structure(const StructureConstants& s, const Subspace& sub);

/// Structure constants in the basis given by the columns of b (invertible).
StructureConstants change_basis(const StructureConstants& s, const QMatrix& b);

std::string to_string(const StructureConstants& s);

}  // namespace lienorm
