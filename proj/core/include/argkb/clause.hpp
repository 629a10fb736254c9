#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/limits.hpp"

namespace argkb {

struct Literal {
  std::string atom;
  bool positive = true;

  Literal negated() const { return Literal{atom, !positive}; }
  Formula to_formula() const;
  std::string to_string() const;

  // Canonical order: by atom name, negative before positive.
  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

/// Disjunction of literals kept sorted and duplicate-free. The empty clause
/// is the contradiction.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  /// True when some atom occurs with both polarities.
  bool is_tautology() const;
  bool contains(const Literal& literal) const;
  /// Every literal of this clause also occurs in `other`.
  bool subsumes(const Clause& other) const;

  Formula to_formula() const;
  /// `!A | C`, or `false` for the empty clause.
  std::string to_string() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
};

/// Negation normal form: negations only on atoms; `->` and `<->` expanded.
Formula to_nnf(const Formula& f);

/// Equivalent clause set obtained by NNF and distribution, with no auxiliary
/// atoms. Tautological clauses are dropped and duplicates merged, so `true`
/// yields no clauses and `false` yields the empty clause. Throws CapExceeded
/// when more than limits.max_clauses clauses would be produced.
std::vector<Clause> to_clauses(const Formula& f, const Limits& limits = {});

/// Reads a formula that is syntactically a disjunction of literals.
/// Throws PreconditionError otherwise.
Clause clause_from_formula(const Formula& f);

/// parse_formula followed by clause_from_formula.
Clause parse_clause(std::string_view text);

}  // namespace argkb
