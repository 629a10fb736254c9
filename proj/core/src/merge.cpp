#include "argkb/merge.hpp"

#include <set>

#include "argkb/errors.hpp"
#include "argkb/stratified_inference.hpp"

namespace argkb {

SourceSet::SourceSet(std::vector<Source> sources) : sources_(std::move(sources)) {
  if (sources_.empty()) throw InvalidKnowledgeBase("at least one source is required");
  std::set<std::string> names;
  for (const auto& s : sources_) {
    if (!names.insert(s.name).second) throw InvalidKnowledgeBase("duplicate source name '" + s.name + "'");
  }
}

namespace {

struct Best {
  std::optional<Weight> weight;
  std::optional<std::string> source;
  std::optional<Argument> argument;

  void offer(const Source& s, const WeightedVerdict& v) {
    if (!v.holds) return;
    const bool better = !weight || *v.weight > *weight || (*v.weight == *weight && s.name < *source);
    if (!better) return;
    weight = v.weight;
    source = s.name;
    argument = v.arguments_for.empty() ? std::nullopt : std::optional<Argument>(v.arguments_for.front());
  }
};

}  // namespace

MergeVerdict am_holds(const SourceSet& sources, const Formula& goal, const Limits& limits) {
  const Formula negated = !goal;
  Best pro;
  Best con;
  for (const auto& s : sources.sources()) {
    pro.offer(s, holds_stratified(s.kb, goal, StratifiedRelation::kPi, limits));
    con.offer(s, holds_stratified(s.kb, negated, StratifiedRelation::kPi, limits));
  }
  MergeVerdict v;
  v.holds = pro.weight.has_value() && (!con.weight || *pro.weight > *con.weight);
  v.weight = pro.weight;
  v.supporting_source = pro.source;
  v.argument_for = pro.argument;
  v.opposing_weight = con.weight;
  v.opposing_source = con.source;
  v.argument_against = con.argument;
  return v;
}

std::vector<MergedEntry> merged_base(const SourceSet& sources, std::span<const Formula> queries,
                                     const Limits& limits) {
  if (queries.empty()) throw PreconditionError("merged_base needs at least one query");
  std::vector<MergedEntry> out;
  for (const auto& q : queries) {
    MergeVerdict v = am_holds(sources, q, limits);
    if (v.holds) out.push_back({q, *v.weight, *v.supporting_source, *v.argument_for});
  }
  return out;
}

}  // namespace argkb
