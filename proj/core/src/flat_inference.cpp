#include "argkb/flat_inference.hpp"

#include <algorithm>
#include <set>

#include "argkb/errors.hpp"
#include "model_set.hpp"
#include "subset_oracle.hpp"

namespace argkb {

using detail::Mask;
using detail::ModelSet;
using detail::SubsetOracle;

std::string_view to_string(FlatRelation relation) {
  switch (relation) {
    case FlatRelation::kFree:
      return "free";
    case FlatRelation::kUniversal:
      return "universal";
    case FlatRelation::kLex:
      return "lex";
    case FlatRelation::kExistential:
      return "existential";
    case FlatRelation::kArgumentative:
      return "argumentative";
  }
  return "?";
}

namespace {

std::vector<Mask> max_cardinality(const std::vector<Mask>& masks) {
  std::size_t best = 0;
  for (Mask m : masks) best = std::max(best, detail::popcount(m));
  std::vector<Mask> out;
  for (Mask m : masks) {
    if (detail::popcount(m) == best) out.push_back(m);
  }
  return out;
}

std::vector<Argument> argument_in(SubsetOracle& oracle, Mask universe, const Formula& goal) {
  std::vector<Argument> out;
  if (auto m = oracle.min_support(universe, goal)) out.push_back(Argument{detail::to_ref(*m), goal, std::nullopt});
  return out;
}

}  // namespace

std::vector<Verdict> holds_all(const FlatKB& kb, const Formula& goal, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  const Formula negated = !goal;
  const std::vector<Mask> mc = oracle.maximal_consistent(oracle.full());
  const std::vector<Mask> lex = max_cardinality(mc);

  Mask free = oracle.full();
  for (Mask m : mc) free &= m;

  auto all_entail = [&](const std::vector<Mask>& subsets) {
    return std::all_of(subsets.begin(), subsets.end(), [&](Mask m) { return oracle.entails(m, goal); });
  };
  const bool some_for = std::any_of(mc.begin(), mc.end(), [&](Mask m) { return oracle.entails(m, goal); });
  const bool some_against = std::any_of(mc.begin(), mc.end(), [&](Mask m) { return oracle.entails(m, negated); });

  const std::vector<Argument> pro = argument_in(oracle, oracle.full(), goal);
  const std::vector<Argument> con = argument_in(oracle, oracle.full(), negated);

  std::vector<Verdict> out;
  out.push_back({FlatRelation::kFree, oracle.entails(free, goal), argument_in(oracle, free, goal), con});
  out.push_back({FlatRelation::kUniversal, all_entail(mc), pro, con});
  out.push_back({FlatRelation::kLex, all_entail(lex), pro, con});
  out.push_back({FlatRelation::kExistential, some_for, pro, con});
  out.push_back({FlatRelation::kArgumentative, some_for && !some_against, pro, con});
  return out;
}

Verdict holds(const FlatKB& kb, const Formula& goal, FlatRelation relation, const Limits& limits) {
  for (auto& v : holds_all(kb, goal, limits)) {
    if (v.relation == relation) return std::move(v);
  }
  throw PreconditionError("unknown flat relation");
}

std::vector<SubsetRef> lex_subsets(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  std::vector<SubsetRef> out;
  for (Mask m : max_cardinality(oracle.maximal_consistent(oracle.full()))) out.push_back(detail::to_ref(m));
  return out;
}

namespace {

// Minimal model sets of argumentative consequences: each contains the
// models of one maximal consistent subset plus one model of every other.
std::vector<ModelSet> implicate_model_sets(const FlatKB& kb, const std::vector<std::string>& vocabulary,
                                           const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  std::vector<ModelSet> models;
  for (Mask m : oracle.maximal_consistent(oracle.full())) {
    models.push_back(detail::models_of(Formula::conjunction_of(kb.select(detail::to_ref(m))), vocabulary, limits));
  }

  std::size_t budget = limits.max_subset_checks;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<ModelSet> candidates;
  for (std::size_t i = 0; i < models.size(); ++i) {
    std::vector<std::vector<std::uint64_t>> choices;
    for (std::size_t j = 0; j < models.size(); ++j) {
      if (j != i) choices.push_back(models[j].members());
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      if (budget-- == 0) throw CapExceeded("max_subset_checks", limits.max_subset_checks);
      ModelSet c = models[i];
      for (std::size_t k = 0; k < choices.size(); ++k) c.set(choices[k][pick[k]]);
      if (seen.insert(c.members()).second) candidates.push_back(std::move(c));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }

  std::vector<ModelSet> minimal;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const ModelSet& d) { return !(d == c) && d.subset_of(c); });
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace

std::vector<Formula> prime_implicates(const FlatKB& kb, const Limits& limits) {
  const std::vector<std::string> vocabulary = kb.vocabulary();
  std::vector<Formula> out;
  for (const auto& models : implicate_model_sets(kb, vocabulary, limits)) {
    out.push_back(detail::minimal_dnf(models, vocabulary));
  }
  return out;
}

bool in_argumentative_closure(const FlatKB& kb, const Formula& goal, const Limits& limits) {
  const std::vector<std::string> vocabulary = kb.vocabulary();
  for (const auto& atom : goal.vocabulary()) {
    if (!std::binary_search(vocabulary.begin(), vocabulary.end(), atom)) {
      throw PreconditionError("goal atom '" + atom + "' does not occur in the knowledge base");
    }
  }
  const ModelSet target = detail::models_of(goal, vocabulary, limits);
  const auto implicates = implicate_model_sets(kb, vocabulary, limits);
  return std::any_of(implicates.begin(), implicates.end(), [&](const ModelSet& m) { return m.subset_of(target); });
}

}  // namespace argkb
