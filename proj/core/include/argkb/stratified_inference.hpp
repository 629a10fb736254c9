#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"

namespace argkb {

enum class StratifiedRelation { kPi, kPiFree, kPreferred, kLexStratified, kArgumentative };

inline constexpr StratifiedRelation kAllStratifiedRelations[] = {
    StratifiedRelation::kPi, StratifiedRelation::kPiFree, StratifiedRelation::kPreferred,
    StratifiedRelation::kLexStratified, StratifiedRelation::kArgumentative};

std::string_view to_string(StratifiedRelation relation);

struct WeightedVerdict {
  StratifiedRelation relation = StratifiedRelation::kArgumentative;
  bool holds = false;
  std::optional<Weight> weight;
  std::vector<Argument> arguments_for;
  std::vector<Argument> arguments_against;
};

/// pi(kb): the longest consistent prefix of layers.
SubsetRef pi_base(const StratifiedKB& kb, const Limits& limits = {});

/// Weight of the first consistent prefix entailing goal.
std::optional<Weight> pi_entails(const StratifiedKB& kb, const Formula& goal,
                                 const Limits& limits = {});

/// 0 for a consistent base, otherwise the weight of the first layer that
/// makes the prefix inconsistent.
Weight inconsistency_level(const StratifiedKB& kb, const Limits& limits = {});

/// Formulas outside pi(kb) that belong to no minimal inconsistent subset.
SubsetRef ifree(const StratifiedKB& kb, const Limits& limits = {});

/// Subbases E_1 u ... u E_n where every E_1 u ... u E_j is maximal
/// consistent in B_1 u ... u B_j.
std::vector<SubsetRef> preferred_subbases(const StratifiedKB& kb, const Limits& limits = {});

/// Preferred subbases maximal under the layer-wise cardinality
/// lexicographic order.
std::vector<SubsetRef> lex_subbases(const StratifiedKB& kb, const Limits& limits = {});

/// Argument of maximal weight for goal. The support is chosen within the
/// smallest prefix admitting one: least cardinality, then lexicographic.
std::optional<Argument> find_argument_stratified(const StratifiedKB& kb, const Formula& goal,
                                                 const Limits& limits = {});

WeightedVerdict holds_stratified(const StratifiedKB& kb, const Formula& goal,
                                 StratifiedRelation relation, const Limits& limits = {});

/// Argumentative verdict computed by growing the prefix B_1, B_1 u B_2, ...
/// and asking at each step whether goal and its negation have arguments.
/// Agrees with holds_stratified(..., kArgumentative).
WeightedVerdict decide_by_layers(const StratifiedKB& kb, const Formula& goal,
                                 const Limits& limits = {});

}  // namespace argkb
