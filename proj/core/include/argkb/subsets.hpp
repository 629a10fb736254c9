#pragma once

#include <optional>
#include <vector>

#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"

namespace argkb {

// Combinatorial structure of a flat knowledge base. Every list is returned
// in canonical order (lexicographic on sorted index sets) and every search
// is bounded by limits.max_subset_checks.

/// MC(kb): consistent subsets whose every strict superset is inconsistent.
std::vector<SubsetRef> maximal_consistent_subsets(const FlatKB& kb, const Limits& limits = {});

/// Inconsistent subsets all of whose proper subsets are consistent.
std::vector<SubsetRef> minimal_inconsistent_subsets(const FlatKB& kb, const Limits& limits = {});

/// Inc(kb): union of the minimal inconsistent subsets.
SubsetRef inc_set(const FlatKB& kb, const Limits& limits = {});

/// Free(kb) computed as the complement of Inc(kb).
SubsetRef free_base(const FlatKB& kb, const Limits& limits = {});

/// Free(kb) computed as the intersection of MC(kb). Always equal to
/// free_base(); kept separate so the two routes can be cross-checked.
SubsetRef free_base_by_intersection(const FlatKB& kb, const Limits& limits = {});

/// Some argument for goal, or nullopt. The support is the lexicographically
/// least among minimum-cardinality supports.
std::optional<Argument> find_argument(const FlatKB& kb, const Formula& goal,
                                      const Limits& limits = {});

/// Every minimal support for goal, ordered by cardinality and then
/// lexicographically, so the first element matches find_argument().
std::vector<Argument> enumerate_arguments(const FlatKB& kb, const Formula& goal,
                                          const Limits& limits = {});

/// Consistency of an explicit subset.
bool is_consistent(const FlatKB& kb, const SubsetRef& subset, const Limits& limits = {});

}  // namespace argkb
