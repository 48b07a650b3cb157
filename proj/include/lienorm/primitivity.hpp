#pragma once

#include "lienorm/lie_structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lienorm {

/// How the quotient g/h gets its basis.
enum class ComplementConvention {
  /// e_c for the non-pivot columns of h's echelon basis.
  NonPivot,
  /// Greedy e_c scanning coordinates from the last to the first.
  Reversed,
};

/// Action of h on g/h.
struct IsotropyRepresentation {
  std::size_t dim = 0;
  /// Basis of h (echelon form); matrices[t] is the action of h_basis[t].
  std::vector<QVector> h_basis;
  /// Lifts of the quotient basis to g.
  std::vector<QVector> complement;
  std::vector<QMatrix> matrices;
};

/// Throws DomainError when h is not closed.
IsotropyRepresentation isotropy_representation(const StructureConstants& s, const Subspace& h,
                                               ComplementConvention convention = ComplementConvention::NonPivot);

/// Unital associative algebra generated by the matrices, as flattened d x d
/// matrices.
Subspace generated_algebra(std::span<const QMatrix> matrices, std::size_t d);
/// Burnside criterion: absolutely irreducible iff the generated algebra is
/// all of End(Q^d). d = 0 counts as reducible.
bool is_irreducible(std::span<const QMatrix> matrices, std::size_t d);
bool is_irreducible(const IsotropyRepresentation& r);

struct IntermediateSearch {
  enum class Outcome { Primitive, Witness, Unknown };
  Outcome outcome = Outcome::Unknown;
  /// h < l < g, closed; set when outcome == Witness.
  std::optional<Subspace> witness;
  std::string reason;
  /// Invariant subspaces of g/h tried.
  std::size_t candidates_tested = 0;
};

/// Searches for a subalgebra strictly between h and g. Irreducible action
/// means primitive. Otherwise candidate invariant subspaces of g/h come from
/// cyclic submodules of kernel vectors of w + cI (w a word of length <= 4 in
/// the action, c in -2..2 or a rational eigenvalue of w), from annihilators
/// of the transposed construction, and from their sums and intersections;
/// the first with a closed preimage is the witness. Requires h != g.
IntermediateSearch find_intermediate(const StructureConstants& s, const Subspace& h);

enum class MorozovTag { Simple, Diagonal, Affine, NotPrimitive, Unknown };
std::string to_string(MorozovTag tag);

struct MorozovVerdict {
  MorozovTag tag = MorozovTag::Unknown;
  std::string reason;
  std::optional<Subspace> witness;
  // evidence
  std::size_t dim_g = 0, dim_h = 0;
  bool effective = false;
  bool semisimple = false;
  Rational killing_determinant = 0;
  /// Dimension of the algebra generated by the ad matrices.
  std::size_t ad_algebra_dim = 0;
  /// Diagonal type: the two ideals.
  std::vector<Subspace> ideals;
  /// Affine type: the abelian ideal complementary to h.
  std::optional<Subspace> abelian_ideal;
};

/// Morozov trichotomy for an effective primitive pair; NotPrimitive and
/// Unknown pass through from find_intermediate and the effectiveness check.
MorozovVerdict classify_morozov(const StructureConstants& s, const Subspace& h);

}  // namespace lienorm
