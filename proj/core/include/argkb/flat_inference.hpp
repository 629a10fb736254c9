#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"

namespace argkb {

enum class FlatRelation { kFree, kUniversal, kLex, kExistential, kArgumentative };

inline constexpr FlatRelation kAllFlatRelations[] = {
    FlatRelation::kFree, FlatRelation::kUniversal, FlatRelation::kLex,
    FlatRelation::kExistential, FlatRelation::kArgumentative};

std::string_view to_string(FlatRelation relation);

/// Outcome of a flat query. arguments_for holds the distinguished argument
/// for the goal (drawn from Free(kb) for the Free relation), and
/// arguments_against the distinguished argument for its negation.
struct Verdict {
  FlatRelation relation = FlatRelation::kArgumentative;
  bool holds = false;
  std::vector<Argument> arguments_for;
  std::vector<Argument> arguments_against;
};

Verdict holds(const FlatKB& kb, const Formula& goal, FlatRelation relation,
              const Limits& limits = {});

/// Verdicts for all five relations from a single MC(kb) enumeration, in
/// kAllFlatRelations order.
std::vector<Verdict> holds_all(const FlatKB& kb, const Formula& goal, const Limits& limits = {});

/// Lex(kb): the maximum-cardinality members of MC(kb).
std::vector<SubsetRef> lex_subsets(const FlatKB& kb, const Limits& limits = {});

/// Strongest argumentative consequences over the vocabulary of kb, one per
/// logical equivalence class, each rendered as a minimal DNF (`true` for the
/// tautology). Ordered by model set.
std::vector<Formula> prime_implicates(const FlatKB& kb, const Limits& limits = {});

/// Whether goal follows classically from some prime implicate. Throws
/// PreconditionError if goal mentions an atom outside the vocabulary of kb.
bool in_argumentative_closure(const FlatKB& kb, const Formula& goal, const Limits& limits = {});

}  // namespace argkb
