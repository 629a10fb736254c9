#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argkb {

class Interpretation;

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { kFalse, kTrue, kAtom, kNot, kAnd, kOr, kImplies, kIff };

  /// The constant `true`.
  Formula();

  static Formula truth();
  static Formula falsity();
  /// Throws PreconditionError unless name is an identifier other than
  /// `true`/`false`.
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  /// Left-nested folds; the empty conjunction is `true`, the empty
  /// disjunction is `false`.
  static Formula conjunction_of(std::span<const Formula> parts);
  static Formula disjunction_of(std::span<const Formula> parts);

  Kind kind() const;
  bool is_binary() const;
  /// Atom name. Precondition: kind() == kAtom.
  const std::string& name() const;
  /// Negated formula. Precondition: kind() == kNot.
  const Formula& operand() const;
  /// Operands of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Sorted, duplicate-free atom names.
  std::vector<std::string> vocabulary() const;

  /// Throws PreconditionError if an atom is missing from the interpretation.
  bool evaluate(const Interpretation& interpretation) const;

  /// Minimal-parenthesis rendering in the input grammar; re-parsing it
  /// yields a structurally equal formula.
  std::string to_string() const;

  /// Structural equality and a total structural order.
  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);

/// Total assignment of truth values over a fixed, sorted vocabulary.
class Interpretation {
 public:
  Interpretation() = default;
  /// Atoms are sorted and deduplicated; values[i] belongs to the i-th atom
  /// of the caller's ordering, so both must have equal length.
  Interpretation(std::vector<std::string> atoms, std::vector<bool> values);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<bool>& values() const { return values_; }

  bool contains(std::string_view atom) const;
  /// Throws PreconditionError for atoms outside the vocabulary.
  bool value(std::string_view atom) const;

  /// Conjunction of the satisfied literals, e.g. `A & !B & C`.
  Formula to_formula() const;
  std::string to_string() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<bool> values_;
};

/// Parses one formula:
///
///   formula := iff;  iff := imp ("<->" imp)*;  imp := or ("->" or)*;
///   or := and ("|" and)*;  and := not ("&" not)*;
///   not := "!" not | atom | "(" formula ")" | "true" | "false";
///   atom := [A-Za-z_][A-Za-z0-9_]*
///
/// `&`, `|` and `<->` associate to the left, `->` to the right. `#` starts a
/// comment that runs to the end of the line. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Sorted union of the vocabularies of all formulas.
std::vector<std::string> vocabulary_of(std::span<const Formula> formulas);

}  // namespace argkb
