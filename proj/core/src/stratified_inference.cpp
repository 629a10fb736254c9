#include "argkb/stratified_inference.hpp"

#include <algorithm>

#include "argkb/errors.hpp"
#include "subset_oracle.hpp"

namespace argkb {

using detail::Mask;
using detail::SubsetOracle;

std::string_view to_string(StratifiedRelation relation) {
  switch (relation) {
    case StratifiedRelation::kPi:
      return "pi";
    case StratifiedRelation::kPiFree:
      return "pi-free";
    case StratifiedRelation::kPreferred:
      return "preferred";
    case StratifiedRelation::kLexStratified:
      return "lex-stratified";
    case StratifiedRelation::kArgumentative:
      return "argumentative";
  }
  return "?";
}

namespace {

// Shared state for one stratified query: the oracle over the flattened base
// and the prefix masks.
class Layered {
 public:
  Layered(const StratifiedKB& kb, const Limits& limits) : kb_(kb), oracle_(kb.flat().formulas(), limits) {
    prefixes_.push_back(0);
    for (std::size_t j = 0; j < kb.layer_count(); ++j) {
      Mask layer = 0;
      for (std::size_t i = 0; i < kb.size(); ++i) {
        if (kb.layer_of(i) == j) layer |= detail::bit(i);
      }
      layers_.push_back(layer);
      prefixes_.push_back(prefixes_.back() | layer);
    }
  }

  SubsetOracle& oracle() { return oracle_; }
  std::size_t layer_count() const { return layers_.size(); }
  Mask layer(std::size_t j) const { return layers_[j]; }
  Mask prefix(std::size_t count) const { return prefixes_[count]; }

  Weight top() const { return kb_.layer_count() == 0 ? Weight::one() : kb_.layers()[0].weight; }
  // Weight of the last layer of prefix(count); the top weight for count 0.
  Weight level(std::size_t count) const { return count == 0 ? top() : kb_.layers()[count - 1].weight; }

  Weight weight_of(Mask support) const {
    Weight w = top();
    for (std::size_t i : detail::indices_of(support)) w = std::min(w, kb_.weight_of(i));
    return w;
  }

  Argument argument(Mask support, const Formula& conclusion) const {
    return Argument{detail::to_ref(support), conclusion, weight_of(support)};
  }

  // Number of layers in pi(kb).
  std::size_t pi_length() {
    std::size_t k = 0;
    while (k < layer_count() && oracle_.consistent(prefix(k + 1))) ++k;
    return k;
  }

  // Steps of the layer-growing search; an empty base still gets one step so
  // that tautologies are supported.
  std::size_t steps() const { return std::max<std::size_t>(layer_count(), 1); }
  Mask step_prefix(std::size_t step) const { return prefix(std::min(step, layer_count())); }
  Weight step_level(std::size_t step) const { return level(std::min(step, layer_count())); }

  std::optional<Argument> best_argument(const Formula& goal) {
    for (std::size_t s = 1; s <= steps(); ++s) {
      if (auto m = oracle_.min_support(step_prefix(s), goal)) return argument(*m, goal);
    }
    return std::nullopt;
  }

  std::vector<Mask> preferred() {
    std::vector<Mask> current{0};
    for (std::size_t j = 0; j < layer_count(); ++j) {
      std::vector<Mask> next;
      for (Mask base : current) {
        for (Mask ext : oracle_.maximal_extensions(base, layer(j))) next.push_back(base | ext);
      }
      current = std::move(next);
    }
    detail::sort_canonical(current);
    current.erase(std::unique(current.begin(), current.end()), current.end());
    return current;
  }

  std::vector<Mask> lex() {
    std::vector<Mask> pref = preferred();
    auto profile = [&](Mask m) {
      std::vector<std::size_t> counts;
      for (std::size_t j = 0; j < layer_count(); ++j) counts.push_back(detail::popcount(m & layer(j)));
      return counts;
    };
    std::vector<std::size_t> best;
    for (Mask m : pref) best = std::max(best, profile(m));
    std::vector<Mask> out;
    for (Mask m : pref) {
      if (profile(m) == best) out.push_back(m);
    }
    return out;
  }

  Mask ifree() {
    Mask inc = 0;
    for (Mask m : oracle_.minimal_inconsistent(oracle_.full())) inc |= m;
    return oracle_.full() & ~inc & ~prefix(pi_length());
  }

 private:
  const StratifiedKB& kb_;
  SubsetOracle oracle_;
  std::vector<Mask> layers_;
  std::vector<Mask> prefixes_;
};

std::vector<SubsetRef> to_refs(const std::vector<Mask>& masks) {
  std::vector<SubsetRef> out;
  for (Mask m : masks) out.push_back(detail::to_ref(m));
  return out;
}

std::vector<Argument> as_list(std::optional<Argument> a) {
  std::vector<Argument> out;
  if (a) out.push_back(std::move(*a));
  return out;
}

}  // namespace

SubsetRef pi_base(const StratifiedKB& kb, const Limits& limits) {
  Layered l(kb, limits);
  return detail::to_ref(l.prefix(l.pi_length()));
}

std::optional<Weight> pi_entails(const StratifiedKB& kb, const Formula& goal, const Limits& limits) {
  Layered l(kb, limits);
  // Tautologies follow from the empty prefix even when B_1 is inconsistent.
  if (l.oracle().entails(0, goal)) return l.top();
  for (std::size_t s = 1; s <= l.steps(); ++s) {
    const Mask p = l.step_prefix(s);
    if (!l.oracle().consistent(p)) break;
    if (l.oracle().entails(p, goal)) return l.step_level(s);
  }
  return std::nullopt;
}

Weight inconsistency_level(const StratifiedKB& kb, const Limits& limits) {
  Layered l(kb, limits);
  const std::size_t k = l.pi_length();
  return k == l.layer_count() ? Weight::zero() : l.level(k + 1);
}

SubsetRef ifree(const StratifiedKB& kb, const Limits& limits) {
  Layered l(kb, limits);
  return detail::to_ref(l.ifree());
}

std::vector<SubsetRef> preferred_subbases(const StratifiedKB& kb, const Limits& limits) {
  Layered l(kb, limits);
  return to_refs(l.preferred());
}

std::vector<SubsetRef> lex_subbases(const StratifiedKB& kb, const Limits& limits) {
  Layered l(kb, limits);
  return to_refs(l.lex());
}

std::optional<Argument> find_argument_stratified(const StratifiedKB& kb, const Formula& goal,
                                                 const Limits& limits) {
  Layered l(kb, limits);
  return l.best_argument(goal);
}

WeightedVerdict holds_stratified(const StratifiedKB& kb, const Formula& goal, StratifiedRelation relation,
                                 const Limits& limits) {
  Layered l(kb, limits);
  auto& oracle = l.oracle();
  const Formula negated = !goal;
  WeightedVerdict v;
  v.relation = relation;
  std::optional<Argument> pro = l.best_argument(goal);
  std::optional<Argument> con = l.best_argument(negated);

  auto all_entail = [&](const std::vector<Mask>& subsets) {
    return std::all_of(subsets.begin(), subsets.end(), [&](Mask m) { return oracle.entails(m, goal); });
  };

  switch (relation) {
    case StratifiedRelation::kPi: {
      const Mask pi = l.prefix(l.pi_length());
      // A consistent prefix entailing goal lies inside pi, and the first such
      // prefix is where the best argument lives.
      v.holds = oracle.entails(pi, goal);
      if (v.holds) v.weight = pro->weight;
      break;
    }
    case StratifiedRelation::kPiFree: {
      const Mask base = l.prefix(l.pi_length()) | l.ifree();
      v.holds = oracle.entails(base, goal);
      if (v.holds) {
        if (auto m = oracle.min_support(base, goal)) pro = l.argument(*m, goal);
      }
      break;
    }
    case StratifiedRelation::kPreferred:
      v.holds = all_entail(l.preferred());
      break;
    case StratifiedRelation::kLexStratified:
      v.holds = all_entail(l.lex());
      break;
    case StratifiedRelation::kArgumentative:
      v.holds = pro.has_value() && (!con || *pro->weight > *con->weight);
      if (v.holds) v.weight = pro->weight;
      break;
  }
  v.arguments_for = as_list(std::move(pro));
  v.arguments_against = as_list(std::move(con));
  return v;
}

WeightedVerdict decide_by_layers(const StratifiedKB& kb, const Formula& goal, const Limits& limits) {
  Layered l(kb, limits);
  auto& oracle = l.oracle();
  const Formula negated = !goal;
  WeightedVerdict v;
  v.relation = StratifiedRelation::kArgumentative;
  for (std::size_t s = 1; s <= l.steps(); ++s) {
    const Mask p = l.step_prefix(s);
    const auto yes = oracle.min_support(p, goal);
    const auto no = oracle.min_support(p, negated);
    if (yes) v.arguments_for.push_back(l.argument(*yes, goal));
    if (no) v.arguments_against.push_back(l.argument(*no, negated));
    if (yes && !no) {
      v.holds = true;
      v.weight = l.step_level(s);
    }
    if (yes || no) break;
  }
  return v;
}

}  // namespace argkb
