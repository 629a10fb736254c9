#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argkb/clause.hpp"
#include "argkb/knowledge_base.hpp"
#include "argkb/limits.hpp"
#include "argkb/weight.hpp"

namespace argkb {

/// A clause with a certainty degree and the certainty of its negation.
struct BiWeightedClause {
  Clause clause;
  Weight certainty;
  Weight counter_certainty;

  Weight paraconsistency() const { return std::min(certainty, counter_certainty); }
  /// `<clause> @ <alpha> ; <beta>`
  std::string to_string() const;

  friend bool operator==(const BiWeightedClause&, const BiWeightedClause&) = default;
};

/// Biweights computed for one source formula before clausal expansion.
struct SourceBiweight {
  std::size_t index = 0;       // global index in the source base
  Formula formula;
  Weight certainty;            // best argument weight for the formula
  Weight counter_certainty;    // best argument weight for its negation, or 0
};

/// A set of biweighted clauses. For each clause only Pareto-optimal pairs
/// (higher certainty, lower counter-certainty) are kept; incomparable pairs
/// coexist. Entries are kept in canonical order: by clause, then certainty
/// descending, then counter-certainty ascending.
class ParaBase {
 public:
  ParaBase() = default;

  /// Adds the entry unless an existing entry for the same clause dominates
  /// or equals it; removes entries it dominates. Returns true if added.
  bool insert(const BiWeightedClause& entry);

  const std::vector<BiWeightedClause>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const BiWeightedClause& entry) const;
  /// Pareto frontier of (certainty, counter_certainty) stored for clause.
  std::vector<std::pair<Weight, Weight>> frontier(const Clause& clause) const;

  /// One entry per line, canonical order.
  std::string serialize() const;

 private:
  std::vector<BiWeightedClause> entries_;
};

/// Parses the line format written by ParaBase::serialize(). Blank lines and
/// `#` comments are skipped. Throws ParseError.
ParaBase parse_para_base(std::string_view text);

/// Best-argument certainty and counter-certainty for every source formula.
std::vector<SourceBiweight> source_biweights(const StratifiedKB& kb, const Limits& limits = {});

/// Sigma': each formula replaced by its clauses carrying (alpha', beta').
/// When alpha' < beta' the negation's clauses are stored with (beta',
/// alpha'); when they are equal both polarities are kept.
ParaBase biweight_base(const StratifiedKB& kb, const Limits& limits = {});

/// The biweighted resolution rule:
///   (A v B, a, b)  (!B v C, c, d)  /  (A v C, min(max(c, b), max(a, d)), max(b, d)).
/// Throws PreconditionError unless the clauses clash on exactly one atom.
BiWeightedClause para_resolve(const BiWeightedClause& first, const BiWeightedClause& second);

/// Closure under para_resolve, discarding tautological resolvents and
/// pruning dominated biweights. Throws CapExceeded above limits.max_clauses.
ParaBase saturate(const ParaBase& base, const Limits& limits = {});

/// Pareto-best biweights with which goal (or a clause subsuming it) is
/// derivable from saturate(biweight_base(kb)); empty when it is not, which
/// includes goals over atoms the base never mentions.
std::vector<std::pair<Weight, Weight>> para_query(const StratifiedKB& kb, const Clause& goal,
                                                  const Limits& limits = {});

/// Same as para_query against an already saturated base.
std::vector<std::pair<Weight, Weight>> para_query(const ParaBase& saturated, const Clause& goal);

}  // namespace argkb
