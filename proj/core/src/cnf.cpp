#include "cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace argkb::detail {

int VarPool::atom(const std::string& name) {
  auto it = atoms_.find(name);
  if (it != atoms_.end()) return it->second;
  const int id = fresh();
  atoms_.emplace(name, id);
  return id;
}

namespace {

class Encoder {
 public:
  Encoder(VarPool& pool, std::vector<CnfClause>& out) : pool_(pool), out_(out) {}

  // Returns a literal equivalent to f under the emitted definitions.
  int literal(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kTrue:
      case K::kFalse: {
        const int x = pool_.fresh();
        out_.push_back({f.kind() == K::kTrue ? x : -x});
        return x;
      }
      case K::kAtom:
        return pool_.atom(f.name());
      case K::kNot:
        return -literal(f.operand());
      case K::kAnd: {
        const int a = literal(f.lhs()), b = literal(f.rhs()), x = pool_.fresh();
        out_.push_back({-x, a});
        out_.push_back({-x, b});
        out_.push_back({x, -a, -b});
        return x;
      }
      case K::kOr: {
        const int a = literal(f.lhs()), b = literal(f.rhs()), x = pool_.fresh();
        out_.push_back({-x, a, b});
        out_.push_back({x, -a});
        out_.push_back({x, -b});
        return x;
      }
      case K::kImplies: {
        const int a = -literal(f.lhs()), b = literal(f.rhs()), x = pool_.fresh();
        out_.push_back({-x, a, b});
        out_.push_back({x, -a});
        out_.push_back({x, -b});
        return x;
      }
      case K::kIff: {
        const int a = literal(f.lhs()), b = literal(f.rhs()), x = pool_.fresh();
        out_.push_back({-x, -a, b});
        out_.push_back({-x, a, -b});
        out_.push_back({x, a, b});
        out_.push_back({x, -a, -b});
        return x;
      }
    }
    return 0;
  }

 private:
  VarPool& pool_;
  std::vector<CnfClause>& out_;
};

class Dpll {
 public:
  Dpll(std::vector<const CnfClause*> clauses, int var_count)
      : clauses_(std::move(clauses)), value_(static_cast<std::size_t>(var_count) + 1, 0) {}

  bool run() {
    if (!propagate()) return false;
    return search();
  }

 private:
  int eval(int lit) const {
    const int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  void assign(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = static_cast<std::int8_t>(lit > 0 ? 1 : -1);
    trail_.push_back(std::abs(lit));
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = 0;
      trail_.pop_back();
    }
  }

  // Unit propagation to a fixpoint; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const CnfClause* clause : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool satisfied = false;
        for (int lit : *clause) {
          const int v = eval(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last);
          changed = true;
        }
      }
    }
    return true;
  }

  // First unassigned literal of the first open clause; 0 when every clause
  // is satisfied.
  int pick() const {
    for (const CnfClause* clause : clauses_) {
      int candidate = 0;
      bool satisfied = false;
      for (int lit : *clause) {
        const int v = eval(lit);
        if (v > 0) {
          satisfied = true;
          break;
        }
        if (v == 0 && candidate == 0) candidate = lit;
      }
      if (!satisfied) return candidate;
    }
    return 0;
  }

  bool search() {
    const int lit = pick();
    if (lit == 0) return true;
    for (int choice : {lit, -lit}) {
      const std::size_t mark = trail_.size();
      assign(choice);
      if (propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<const CnfClause*> clauses_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
};

}  // namespace

Fragment encode(const Formula& f, VarPool& pool, bool negate) {
  Fragment fragment;
  Encoder encoder(pool, fragment.clauses);
  const int root = encoder.literal(f);
  fragment.clauses.push_back({negate ? -root : root});
  return fragment;
}

bool solve(std::span<const Fragment* const> fragments, int var_count) {
  std::vector<const CnfClause*> clauses;
  for (const Fragment* fragment : fragments) {
    for (const auto& c : fragment->clauses) clauses.push_back(&c);
  }
  // Short clauses first so propagation reaches units early.
  std::stable_sort(clauses.begin(), clauses.end(),
                   [](const CnfClause* a, const CnfClause* b) { return a->size() < b->size(); });
  return Dpll(std::move(clauses), var_count).run();
}

}  // namespace argkb::detail
