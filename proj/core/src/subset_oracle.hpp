#pragma once

// Memoized consistency/entailment checks over subsets of a fixed formula
// list, plus the subset searches built on them. Subsets are bitmasks over
// formula positions.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"
#include "cnf.hpp"

namespace argkb::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxFormulas = 63;

inline Mask bit(std::size_t index) { return Mask{1} << index; }
inline bool has(Mask m, std::size_t index) { return ((m >> index) & 1U) != 0; }
inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

Mask to_mask(const SubsetRef& subset);
SubsetRef to_ref(Mask m);
std::vector<std::size_t> indices_of(Mask m);
/// Lexicographic order on the sorted index sequences.
bool lex_less(Mask a, Mask b);
void sort_canonical(std::vector<Mask>& masks);

class SubsetOracle {
 public:
  /// Throws CapExceeded for more than kMaxFormulas formulas or a vocabulary
  /// above limits.max_atoms.
  SubsetOracle(std::span<const Formula> formulas, const Limits& limits);

  std::size_t size() const { return fragments_.size(); }
  Mask full() const { return size() == 0 ? 0 : (~Mask{0} >> (64 - size())); }
  const Limits& limits() const { return limits_; }
  std::size_t checks() const { return checks_; }

  bool consistent(Mask subset);
  bool entails(Mask subset, const Formula& goal);

  /// Maximal S within `candidates` such that base | S is consistent. base
  /// must be consistent and disjoint from candidates. Canonical order.
  const std::vector<Mask>& maximal_extensions(Mask base, Mask candidates);
  std::vector<Mask> maximal_consistent(Mask universe) { return maximal_extensions(0, universe); }
  std::vector<Mask> minimal_inconsistent(Mask universe);

  /// Some consistent subset of universe entails goal (checked via the
  /// maximal consistent subsets of universe).
  bool has_support(Mask universe, const Formula& goal);
  /// Least-cardinality, then lexicographically least, consistent subset of
  /// universe entailing goal.
  std::optional<Mask> min_support(Mask universe, const Formula& goal);
  /// Every minimal support inside universe, by cardinality then lex.
  std::vector<Mask> all_supports(Mask universe, const Formula& goal);

 private:
  struct GoalEntry {
    Fragment negated;
    std::unordered_map<Mask, bool> memo;
  };

  std::vector<Mask> entailing_hosts(Mask universe, const Formula& goal);
  void charge();
  bool run(Mask subset, const Fragment* extra);
  GoalEntry& goal_entry(const Formula& goal);

  Limits limits_;
  VarPool pool_;
  std::vector<std::string> vocabulary_;
  std::vector<Fragment> fragments_;
  std::unordered_map<Mask, bool> consistent_memo_;
  std::map<Formula, GoalEntry> goals_;
  std::map<std::pair<Mask, Mask>, std::vector<Mask>> extensions_memo_;
  std::size_t checks_ = 0;
};

}  // namespace argkb::detail
