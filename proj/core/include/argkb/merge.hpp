#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"

namespace argkb {

struct Source {
  std::string name;
  StratifiedKB kb;
};

/// Named knowledge bases to be merged. Non-empty, names unique.
class SourceSet {
 public:
  /// Throws InvalidKnowledgeBase on an empty list or duplicate names.
  explicit SourceSet(std::vector<Source> sources);

  const std::vector<Source>& sources() const { return sources_; }
  std::size_t size() const { return sources_.size(); }

 private:
  std::vector<Source> sources_;
};

struct MergeVerdict {
  bool holds = false;
  /// Best pi-entailment weight of the goal over all sources.
  std::optional<Weight> weight;
  std::optional<std::string> supporting_source;
  std::optional<Argument> argument_for;
  /// Best pi-entailment weight of the negated goal over all sources.
  std::optional<Weight> opposing_weight;
  std::optional<std::string> opposing_source;
  std::optional<Argument> argument_against;
};

/// Multi-source argumentative consequence: some source pi-entails goal at
/// alpha and every source pi-entailing its negation does so at a weight
/// strictly below alpha. Ties between sources are attributed to the
/// lexicographically smallest source name.
MergeVerdict am_holds(const SourceSet& sources, const Formula& goal, const Limits& limits = {});

struct MergedEntry {
  Formula formula;
  Weight weight;
  std::string source;
  Argument argument;
};

/// The accepted subset of `queries`, in query order. The result may be
/// jointly inconsistent. Throws PreconditionError when queries is empty.
std::vector<MergedEntry> merged_base(const SourceSet& sources, std::span<const Formula> queries,
                                     const Limits& limits = {});

}  // namespace argkb
