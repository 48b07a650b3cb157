#pragma once

#include "lienorm/primitivity.hpp"
#include "lienorm/stabilizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lienorm {

/// A normalization could not be carried out; the message names the step.
class NormalizationError : public DomainError {
public:
  using DomainError::DomainError;
};
/// h = 0: the affine construction needs a non-abelian pair.
class AbelianCase : public NormalizationError {
public:
  using NormalizationError::NormalizationError;
};
/// dim V0 < n: the algebra preserves a foliation.
class NonPrimitiveDetected : public NormalizationError {
public:
  using NormalizationError::NormalizationError;
};

struct RationalMap {
  Chart source;
  Chart target;
  /// One entry per target coordinate, as functions on the source.
  std::vector<RationalFunction> entries;

  std::vector<std::string> to_strings() const;
};

/// v(phi_i) = w_i o phi for every i.
bool verify_phi_related(const VectorField& v, const RationalMap& phi, const VectorField& w);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct NormalizationResult {
  enum class Mode { Curve, Affine };
  Mode mode = Mode::Curve;
  RationalMap map;
  /// Image of each original basis field on the target chart.
  std::vector<VectorField> transformed_basis;
  std::vector<bool> related;
  /// Curve mode: v1(phi) = 1, v2(phi) = phi, v3(phi) = phi^2.
  /// Affine mode: the trace identity per basis field.
  std::vector<NamedCheck> checks;
  /// Curve mode: the sign in phi = sign * b / a and the coordinates of v1, v2, v3.
  int sign = 1;
  std::vector<QVector> triple;
  /// Affine mode: base point, abelian ideal basis adjusted to e_j(p) = unit vectors.
  QVector base_point;
  std::vector<QVector> ideal_basis;

  bool all_passed() const;
};

std::string to_string(NormalizationResult::Mode mode);

/// v1, v2 in coordinates with [v1, v2] = v1. Candidates for v2 are the basis
/// elements followed by small integer combinations; v1 is an eigenvector of
/// ad(candidate) for the smallest nonzero rational eigenvalue lambda and
/// v2 = -candidate / lambda.
std::pair<QVector, QVector> find_affine_pair(const VectorFieldAlgebra& a);

/// phi = b / a from v1 = a d/dz, v2 = b d/dz, verified exactly.
NormalizationResult normalize_curve(const VectorFieldAlgebra& a);

/// Top wedge of the fields. Throws DomainError when it vanishes.
MultiVector theta0(std::span<const VectorField> m_basis);
/// L_v Theta0 = Tr(ad v restricted to m) Theta0. Throws DomainError when
/// [v, m] leaves the constant span of m.
bool trace_identity_check(const VectorField& v, std::span<const VectorField> m_basis);
/// Tr(ad v restricted to m).
Rational trace_on(const VectorField& v, std::span<const VectorField> m_basis);

/// psi(theta ^ w) = (theta ^ w) / Theta0 for theta the (n-1)-fold wedges of
/// m_basis (omitting index j) and w the h fields, listed j-major.
std::vector<RationalFunction> psi_values(std::span<const VectorField> m_basis, std::span<const VectorField> h_basis);

/// Echelon basis of the span of psi over Q; throws AbelianCase when h is
/// empty and NonPrimitiveDetected when the span has dimension < n.
std::vector<RationalFunction> build_V0(std::span<const VectorField> m_basis, std::span<const VectorField> h_basis,
                                       const QVector& base_point);

/// Affine-type normalization at a generic point.
NormalizationResult normalize_affine(const VectorFieldAlgebra& a, std::uint64_t seed);

}  // namespace lienorm
