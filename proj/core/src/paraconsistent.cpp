#include "argkb/paraconsistent.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "argkb/errors.hpp"
#include "subset_oracle.hpp"

namespace argkb {

using detail::Mask;

std::string BiWeightedClause::to_string() const {
  return clause.to_string() + " @ " + certainty.to_string() + " ; " + counter_certainty.to_string();
}

namespace {

bool canonical_less(const BiWeightedClause& a, const BiWeightedClause& b) {
  if (a.clause != b.clause) return a.clause < b.clause;
  if (a.certainty != b.certainty) return a.certainty > b.certainty;
  return a.counter_certainty < b.counter_certainty;
}

// a is at least as good as b: no less certain and no more paraconsistent.
bool dominates(const BiWeightedClause& a, const BiWeightedClause& b) {
  return a.certainty >= b.certainty && a.counter_certainty <= b.counter_certainty;
}

}  // namespace

bool ParaBase::insert(const BiWeightedClause& entry) {
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), entry.clause,
                             [](const BiWeightedClause& e, const Clause& c) { return e.clause < c; });
  auto hi = lo;
  while (hi != entries_.end() && hi->clause == entry.clause) ++hi;
  if (std::any_of(lo, hi, [&](const BiWeightedClause& e) { return dominates(e, entry); })) return false;
  entries_.erase(std::remove_if(lo, hi, [&](const BiWeightedClause& e) { return dominates(entry, e); }), hi);
  entries_.insert(std::lower_bound(entries_.begin(), entries_.end(), entry, canonical_less), entry);
  return true;
}

bool ParaBase::contains(const BiWeightedClause& entry) const {
  return std::binary_search(entries_.begin(), entries_.end(), entry, canonical_less);
}

std::vector<std::pair<Weight, Weight>> ParaBase::frontier(const Clause& clause) const {
  std::vector<std::pair<Weight, Weight>> out;
  for (const auto& e : entries_) {
    if (e.clause == clause) out.emplace_back(e.certainty, e.counter_certainty);
  }
  return out;
}

std::string ParaBase::serialize() const {
  std::string out;
  for (const auto& e : entries_) out += e.to_string() + "\n";
  return out;
}

ParaBase parse_para_base(std::string_view text) {
  ParaBase base;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto at = line.find('@');
    const auto semi = line.find(';', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || semi == std::string::npos) {
      throw ParseError("expected '<clause> @ <alpha> ; <beta>'", line_no, 1);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    BiWeightedClause entry;
    try {
      entry.clause = parse_clause(line.substr(0, at));
      entry.certainty = Weight::parse(trim(line.substr(at + 1, semi - at - 1)));
      entry.counter_certainty = Weight::parse(trim(line.substr(semi + 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column());
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
    base.insert(entry);
  }
  return base;
}

std::vector<SourceBiweight> source_biweights(const StratifiedKB& kb, const Limits& limits) {
  detail::SubsetOracle oracle(kb.flat().formulas(), limits);
  const Weight top = kb.layer_count() == 0 ? Weight::one() : kb.layers()[0].weight;
  // Weight of the first prefix holding an argument, 0 if none does.
  auto best = [&](const Formula& goal) {
    for (std::size_t k = 1; k <= kb.layer_count(); ++k) {
      if (oracle.has_support(detail::to_mask(kb.prefix(k)), goal)) return kb.layers()[k - 1].weight;
    }
    return kb.layer_count() == 0 && oracle.has_support(0, goal) ? top : Weight::zero();
  };
  std::vector<SourceBiweight> out;
  for (std::size_t i = 0; i < kb.size(); ++i) {
    const Formula& f = kb.flat()[i];
    out.push_back({i, f, best(f), best(!f)});
  }
  return out;
}

ParaBase biweight_base(const StratifiedKB& kb, const Limits& limits) {
  ParaBase base;
  auto add = [&](const Formula& f, Weight a, Weight b) {
    for (auto& c : to_clauses(f, limits)) {
      if (!c.is_tautology()) base.insert({std::move(c), a, b});
    }
  };
  for (const auto& s : source_biweights(kb, limits)) {
    if (s.certainty >= s.counter_certainty) add(s.formula, s.certainty, s.counter_certainty);
    if (s.certainty <= s.counter_certainty) add(!s.formula, s.counter_certainty, s.certainty);
  }
  return base;
}

BiWeightedClause para_resolve(const BiWeightedClause& first, const BiWeightedClause& second) {
  std::vector<Literal> clashes;
  for (const auto& l : first.clause.literals()) {
    if (second.clause.contains(l.negated())) clashes.push_back(l);
  }
  if (clashes.size() != 1) {
    throw PreconditionError("clauses " + first.clause.to_string() + " and " + second.clause.to_string() +
                            " clash on " + std::to_string(clashes.size()) + " literals, expected 1");
  }
  const Literal pivot = clashes.front();
  std::vector<Literal> literals;
  for (const auto& l : first.clause.literals()) {
    if (l != pivot) literals.push_back(l);
  }
  for (const auto& l : second.clause.literals()) {
    if (l != pivot.negated()) literals.push_back(l);
  }
  const Weight a = first.certainty;
  const Weight b = first.counter_certainty;
  const Weight c = second.certainty;
  const Weight d = second.counter_certainty;
  return {Clause(std::move(literals)), std::min(std::max(c, b), std::max(a, d)), std::max(b, d)};
}

namespace {

std::size_t clash_count(const Clause& x, const Clause& y) {
  std::size_t n = 0;
  for (const auto& l : x.literals()) {
    if (y.contains(l.negated())) ++n;
  }
  return n;
}

}  // namespace

ParaBase saturate(const ParaBase& base, const Limits& limits) {
  ParaBase out;
  std::deque<BiWeightedClause> pending;
  for (const auto& e : base.entries()) {
    if (out.insert(e)) pending.push_back(e);
  }
  while (!pending.empty()) {
    const BiWeightedClause e = pending.front();
    pending.pop_front();
    if (!out.contains(e)) continue;  // superseded since it was queued
    const std::vector<BiWeightedClause> snapshot = out.entries();
    for (const auto& other : snapshot) {
      if (clash_count(e.clause, other.clause) != 1) continue;
      BiWeightedClause r = para_resolve(e, other);
      if (r.clause.is_tautology()) continue;
      if (out.insert(r)) {
        if (out.size() > limits.max_clauses) throw CapExceeded("max_clauses", limits.max_clauses);
        pending.push_back(std::move(r));
      }
    }
  }
  return out;
}

namespace {

std::vector<std::pair<Weight, Weight>> best_for(const ParaBase& saturated, const Clause& goal) {
  ParaBase matches;
  for (const auto& e : saturated.entries()) {
    if (e.clause.subsumes(goal)) matches.insert({goal, e.certainty, e.counter_certainty});
  }
  return matches.frontier(goal);
}

}  // namespace

std::vector<std::pair<Weight, Weight>> para_query(const StratifiedKB& kb, const Clause& goal, const Limits& limits) {
  return best_for(saturate(biweight_base(kb, limits), limits), goal);
}

std::vector<std::pair<Weight, Weight>> para_query(const ParaBase& saturated, const Clause& goal) {
  return best_for(saturated, goal);
}

}  // namespace argkb
