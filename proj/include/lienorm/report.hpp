#pragma once

#include "lienorm/io.hpp"

#include <cstdint>
#include <string>

namespace lienorm {

/// The requested operation does not apply to this input.
class Inapplicable : public InputError {
public:
  using InputError::InputError;
};

struct RunOptions {
  std::uint64_t seed = 1;
  /// Adds wall-clock milliseconds per stage; reports are then not reproducible.
  bool timings = false;
};

enum class NormalizeMode { Auto, Curve, Affine };
NormalizeMode parse_normalize_mode(const std::string& text);

/// Stabilizer, structure and primitivity analysis. Field inputs are analyzed
/// at a generic point; abstract-only inputs use their declared h.
Json analyze_report(const AlgebraInput& in, const RunOptions& opt);

/// analyze_report plus a "normalization" section. Auto mode picks the curve
/// construction on one-dimensional charts and the affine one for affine-type
/// pairs, and reports Simple and Diagonal pairs as out of scope. Throws
/// Inapplicable when the chosen mode does not apply.
Json normalize_report(const AlgebraInput& in, NormalizeMode mode, const RunOptions& opt);

/// Jets of order k realizing the abstract pair, or the pair read off the
/// fields at a generic point when no abstract pair is given.
Json realize_report(const AlgebraInput& in, unsigned order, const RunOptions& opt);

/// 0 success, 2 input error or inapplicable request, 3 identity violation.
int exit_code(const std::exception& e);
Json error_report(const std::exception& e);

}  // namespace lienorm
