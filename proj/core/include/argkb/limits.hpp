#pragma once

#include <cstddef>

namespace argkb {

/// Resource caps shared by every engine operation. Exceeding one raises
/// CapExceeded.
struct Limits {
  /// Largest vocabulary accepted by the SAT oracle and by model enumeration.
  std::size_t max_atoms = 24;
  /// Distinct subset consistency/entailment checks per top-level operation.
  std::size_t max_subset_checks = std::size_t{1} << 16;
  /// Clauses produced by CNF distribution or kept during saturation.
  std::size_t max_clauses = 4096;
};

}  // namespace argkb
