#include "argkb/clause.hpp"

#include <algorithm>
#include <set>

#include "argkb/errors.hpp"

namespace argkb {

Formula Literal::to_formula() const {
  Formula a = Formula::atom(atom);
  return positive ? a : !a;
}

std::string Literal::to_string() const { return positive ? atom : "!" + atom; }

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.positive <=> b.positive;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::is_tautology() const {
  // Sorted by atom, so complementary literals are adjacent.
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].atom == literals_[i - 1].atom) return true;
  }
  return false;
}

bool Clause::contains(const Literal& literal) const {
  return std::binary_search(literals_.begin(), literals_.end(), literal);
}

bool Clause::subsumes(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                       literals_.end());
}

Formula Clause::to_formula() const {
  std::vector<Formula> parts;
  parts.reserve(literals_.size());
  for (const auto& l : literals_) parts.push_back(l.to_formula());
  return Formula::disjunction_of(parts);
}

std::string Clause::to_string() const {
  if (literals_.empty()) return "false";
  std::string out;
  for (const auto& l : literals_) {
    if (!out.empty()) out += " | ";
    out += l.to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return std::lexicographical_compare_three_way(a.literals_.begin(), a.literals_.end(),
                                                b.literals_.begin(), b.literals_.end());
}

namespace {

Formula nnf(const Formula& f, bool negate) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      return negate ? Formula::falsity() : Formula::truth();
    case K::kFalse:
      return negate ? Formula::truth() : Formula::falsity();
    case K::kAtom:
      return negate ? !f : f;
    case K::kNot:
      return nnf(f.operand(), !negate);
    case K::kAnd:
      return negate ? Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::kOr:
      return negate ? Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::kImplies:
      return negate ? Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), true))
                    : Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case K::kIff: {
      // a <-> b  ==  (!a | b) & (a | !b);  !(a <-> b)  ==  (a | b) & (!a | !b)
      const Formula pa = nnf(f.lhs(), false), na = nnf(f.lhs(), true);
      const Formula pb = nnf(f.rhs(), false), nb = nnf(f.rhs(), true);
      return negate ? Formula::conjunction(Formula::disjunction(pa, pb), Formula::disjunction(na, nb))
                    : Formula::conjunction(Formula::disjunction(na, pb), Formula::disjunction(pa, nb));
    }
  }
  return f;
}

using ClauseSet = std::set<Clause>;

void check_cap(const ClauseSet& clauses, const Limits& limits) {
  if (clauses.size() > limits.max_clauses) throw CapExceeded("max_clauses", limits.max_clauses);
}

// CNF of an NNF formula; tautologies removed.
ClauseSet distribute(const Formula& f, const Limits& limits) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTrue:
      return {};
    case K::kFalse:
      return {Clause{}};
    case K::kAtom:
      return {Clause({Literal{f.name(), true}})};
    case K::kNot:
      return {Clause({Literal{f.operand().name(), false}})};
    case K::kAnd: {
      ClauseSet out = distribute(f.lhs(), limits);
      out.merge(distribute(f.rhs(), limits));
      check_cap(out, limits);
      return out;
    }
    case K::kOr: {
      const ClauseSet left = distribute(f.lhs(), limits);
      const ClauseSet right = distribute(f.rhs(), limits);
      ClauseSet out;
      for (const auto& a : left) {
        for (const auto& b : right) {
          std::vector<Literal> lits = a.literals();
          lits.insert(lits.end(), b.literals().begin(), b.literals().end());
          Clause c(std::move(lits));
          if (!c.is_tautology()) out.insert(std::move(c));
          check_cap(out, limits);
        }
      }
      return out;
    }
    default:
      break;
  }
  throw PreconditionError("distribute: formula is not in NNF");
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

std::vector<Clause> to_clauses(const Formula& f, const Limits& limits) {
  ClauseSet clauses = distribute(to_nnf(f), limits);
  if (clauses.contains(Clause{})) return {Clause{}};
  return {clauses.begin(), clauses.end()};
}

namespace {

void collect_literals(const Formula& f, std::vector<Literal>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
      out.push_back({f.name(), true});
      return;
    case K::kNot:
      if (f.operand().kind() == K::kAtom) {
        out.push_back({f.operand().name(), false});
        return;
      }
      break;
    case K::kOr:
      collect_literals(f.lhs(), out);
      collect_literals(f.rhs(), out);
      return;
    case K::kFalse:
      return;
    default:
      break;
  }
  throw PreconditionError("not a clause: " + f.to_string());
}

}  // namespace

Clause clause_from_formula(const Formula& f) {
  std::vector<Literal> literals;
  collect_literals(f, literals);
  return Clause(std::move(literals));
}

Clause parse_clause(std::string_view text) { return clause_from_formula(parse_formula(text)); }

}  // namespace argkb
