#pragma once

#include "lienorm/lie_structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lienorm {

/// An abstract pair (g, h) with h of codimension n >= 1, realized to order k.
struct RealizationProblem {
  StructureConstants structure;
  Subspace h;
  unsigned order = 1;

  std::size_t codimension() const { return structure.dim() - h.dim(); }
  /// Throws InputError when h is not closed, has codimension 0 or order is 0.
  void validate() const;
};

struct Realization {
  Chart chart;
  unsigned order = 0;
  /// One jet per basis element of g.
  std::vector<JetField> images;
  /// Largest ideal of g inside h; these elements map to zero.
  Subspace kernel;
  /// Lifts of the coordinate directions: image of complement[i] is d/dx_i at 0.
  std::vector<QVector> complement;
  /// One line per degree.
  std::vector<std::string> gauge_log;

  /// sum_a x_a images[a].
  JetField image(const QVector& x) const;
};

/// Degree-by-degree formal realization. The degree-d parts of the h images
/// are forced by their partial derivatives; those of the complement images
/// are fixed by the radial gauge sum_j x_j Phi(e_j)^(d) = 0. Throws
/// IdentityViolation with the degree and residual when a system is
/// inconsistent.
Realization realize_truncated(const RealizationProblem& p);

struct RealizationCheck {
  bool passed = false;
  /// Lowest degree where an invariant fails.
  std::optional<unsigned> failure_degree;
  std::string message;
};

/// Complement images are d/dx_i at 0, h images vanish at 0, and the
/// homomorphism equations hold through degree order - 1.
RealizationCheck check_realization(const Realization& r, const RealizationProblem& p);

/// {x : image(x) vanishes at 0}.
Subspace isotropy_at_origin(const Realization& r);

}  // namespace lienorm
