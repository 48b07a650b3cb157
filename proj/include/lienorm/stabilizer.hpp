#pragma once

#include "lienorm/lie_structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lienorm {

/// No admissible point was found within the retry budget.
class DegenerateInput : public DomainError {
public:
  using DomainError::DomainError;
};

struct BasePoint {
  QVector coordinates;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  /// Rank of the coefficient matrix over the function field.
  std::size_t generic_rank = 0;
  /// Rank of the evaluation matrix at the point (equals generic_rank).
  std::size_t point_rank = 0;
  /// Every basis-field denominator with its nonzero value at the point.
  std::vector<std::pair<std::string, Rational>> denominators;
};

/// Seeded pseudorandom rational point where all denominators are nonzero
/// and the evaluation rank equals the generic rank. Coordinate height grows
/// with the attempt count. Throws DegenerateInput after max_attempts.
BasePoint pick_generic_point(const VectorFieldAlgebra& a, std::uint64_t seed, unsigned max_attempts = 400);

/// Rank of the m x n coefficient matrix over Q(x).
std::size_t generic_rank(const VectorFieldAlgebra& a);
bool is_transitive(const VectorFieldAlgebra& a);

/// n x m matrix whose column i is e_i(p). Throws DomainError when a
/// denominator vanishes at p.
QMatrix evaluation_matrix(const VectorFieldAlgebra& a, const QVector& p);
/// Fields vanishing at p, as coordinates.
Subspace isotropy_at(const VectorFieldAlgebra& a, const QVector& p);
Subspace normalizer_in_g(const VectorFieldAlgebra& a, const Subspace& h);

/// n minus the rank at p of the gradients of all coefficient functions of
/// the h fields: the Zariski tangent dimension of their common zero locus.
/// Throws DomainError when some coefficient does not vanish at p.
std::size_t zero_locus_tangent(const VectorFieldAlgebra& a, const Subspace& h, const QVector& p);

/// Polynomial vector fields of degree <= D commuting with every basis field.
std::vector<VectorField> centralizer_witnesses(const VectorFieldAlgebra& a, unsigned degree_bound);

struct AmbientNormalizer {
  unsigned degree_bound = 0;
  /// Basis of {v polynomial, deg v <= D, [v, g] in g}.
  std::vector<VectorField> fields;
  /// induced[t] e_i = [fields[t], e_i], in basis coordinates (columns).
  std::vector<QMatrix> induced;
};
/// Throws DomainError unless every basis field is polynomial.
AmbientNormalizer normalizer_in_ambient(const VectorFieldAlgebra& a, unsigned degree_bound);

struct StabilizerReport {
  BasePoint point;
  bool transitive = false;
  Subspace isotropy;
  Subspace normalizer;
  std::size_t zero_locus_tangent_dim = 0;
  std::size_t centralizer_dim = 0;
  /// Filled when a witness degree is requested.
  std::optional<unsigned> witness_degree;
  std::vector<VectorField> centralizer_witnesses;
};

/// Isotropy, normalizer and zero-locus data at a generic point. Throws
/// DomainError when a is not transitive and IdentityViolation when
/// dim N != dim h + dim T0Z.
StabilizerReport stabilizer_report(const VectorFieldAlgebra& a, std::uint64_t seed,
                                   std::optional<unsigned> witness_degree = std::nullopt);

}  // namespace lienorm
