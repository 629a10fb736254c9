#pragma once

// Solver-internal CNF: definitional encoding of formulas and a small DPLL
// search. Variables are positive ints, literals are signed ints.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "argkb/formula.hpp"

namespace argkb::detail {

using CnfClause = std::vector<int>;

/// Hands out variable ids. Atom ids are stable per name; auxiliary ids are
/// never reused, so fragments encoded against one pool can be combined
/// freely.
class VarPool {
 public:
  int atom(const std::string& name);
  int fresh() { return next_++; }
  int var_count() const { return next_ - 1; }
  std::size_t atom_count() const { return atoms_.size(); }

 private:
  std::map<std::string, int, std::less<>> atoms_;
  int next_ = 1;
};

/// Clauses asserting one formula (or its negation).
struct Fragment {
  std::vector<CnfClause> clauses;
};

/// Definitional encoding of `f` (negated when `negate`) into a fragment.
Fragment encode(const Formula& f, VarPool& pool, bool negate = false);

/// DPLL with unit propagation over the union of the given fragments.
bool solve(std::span<const Fragment* const> fragments, int var_count);

}  // namespace argkb::detail
