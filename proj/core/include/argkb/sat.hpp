#pragma once

#include <span>
#include <string>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/limits.hpp"

namespace argkb {

/// True iff some interpretation over the joint vocabulary satisfies every
/// formula. Decided by DPLL over a definitional CNF encoding (the auxiliary
/// variables never leave the solver). Throws CapExceeded when the joint
/// vocabulary exceeds limits.max_atoms.
bool is_satisfiable(std::span<const Formula> formulas, const Limits& limits = {});

/// formulas |- goal, i.e. formulas + {!goal} is unsatisfiable.
bool entails(std::span<const Formula> formulas, const Formula& goal, const Limits& limits = {});

/// All satisfying interpretations over `vocabulary`, enumerated by truth
/// table in canonical order: atoms sorted by name, the first atom varies
/// slowest, false before true. Throws PreconditionError if the vocabulary
/// does not cover the formulas, CapExceeded above limits.max_atoms.
std::vector<Interpretation> enumerate_models(std::span<const Formula> formulas,
                                             std::vector<std::string> vocabulary,
                                             const Limits& limits = {});

}  // namespace argkb
