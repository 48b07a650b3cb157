#pragma once

#include "lienorm/report.hpp"

#include <string>
#include <vector>

namespace lienorm {

/// Built-in example corpus. Each entry carries meta.name, meta.description
/// and meta.expected, the results a correct analysis must reproduce:
///   transitive, dims [g, h, N, T0Z, C] (field entries) or [g, h, N]
///   (abstract entries), morozov, complete, effective, normalize
///   (curve | affine | out_of_scope | inapplicable), realize_kernel_dim.
std::vector<AlgebraInput> load_catalog();
/// Throws InputError for an unknown name.
AlgebraInput catalog_entry(const std::string& name);

struct EntryOutcome {
  std::string name;
  bool matched = false;
  std::vector<std::string> mismatches;
  Json analysis;
  /// Present when the entry expects a normalization outcome.
  Json normalization;
};

/// Runs analyze (and normalize when expected) and compares with meta.expected.
/// Never throws; errors become mismatches.
EntryOutcome run_entry(const AlgebraInput& entry, const RunOptions& opt);
/// Entries run as independent parallel tasks; results keep catalog order.
std::vector<EntryOutcome> run_catalog(const std::vector<AlgebraInput>& entries, const RunOptions& opt);
std::vector<EntryOutcome> run_catalog_serial(const std::vector<AlgebraInput>& entries, const RunOptions& opt);

}  // namespace lienorm
