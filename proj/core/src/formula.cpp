#include "argkb/formula.hpp"

#include <algorithm>
#include <cctype>

#include "argkb/errors.hpp"

namespace argkb {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula lhs;  // operand of kNot
  Formula rhs;

  Node(Kind k, std::string n) : kind(k), name(std::move(n)), lhs(nullptr), rhs(nullptr) {}
  Node(Kind k, Formula a, Formula b) : kind(k), lhs(std::move(a)), rhs(std::move(b)) {}
};

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_keyword(std::string_view name) { return name == "true" || name == "false"; }

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth() {
  static const auto node = std::make_shared<const Node>(Kind::kTrue, std::string{});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<const Node>(Kind::kFalse, std::string{});
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name) || is_keyword(name)) {
    throw PreconditionError("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Kind::kAtom, std::move(name)));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Kind::kNot, std::move(operand), Formula(nullptr)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::kAnd, std::move(lhs), std::move(rhs)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::kOr, std::move(lhs), std::move(rhs)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::kImplies, std::move(lhs), std::move(rhs)));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Kind::kIff, std::move(lhs), std::move(rhs)));
}

Formula Formula::conjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return truth();
  Formula result = parts.front();
  for (const auto& part : parts.subspan(1)) result = conjunction(result, part);
  return result;
}

Formula Formula::disjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return falsity();
  Formula result = parts.front();
  for (const auto& part : parts.subspan(1)) result = disjunction(result, part);
  return result;
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (node_->kind) {
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::name() const {
  if (node_->kind != Kind::kAtom) throw PreconditionError("name() on a non-atom");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (node_->kind != Kind::kNot) throw PreconditionError("operand() on a non-negation");
  return node_->lhs;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw PreconditionError("lhs() on a non-binary formula");
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw PreconditionError("rhs() on a non-binary formula");
  return node_->rhs;
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return;
    case Formula::Kind::kAtom:
      out.push_back(f.name());
      return;
    case Formula::Kind::kNot:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

void sort_unique(std::vector<std::string>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

}  // namespace

std::vector<std::string> Formula::vocabulary() const {
  std::vector<std::string> atoms;
  collect_atoms(*this, atoms);
  sort_unique(atoms);
  return atoms;
}

std::vector<std::string> vocabulary_of(std::span<const Formula> formulas) {
  std::vector<std::string> atoms;
  for (const auto& f : formulas) collect_atoms(f, atoms);
  sort_unique(atoms);
  return atoms;
}

bool Formula::evaluate(const Interpretation& interpretation) const {
  switch (kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAtom:
      return interpretation.value(name());
    case Kind::kNot:
      return !operand().evaluate(interpretation);
    case Kind::kAnd:
      return lhs().evaluate(interpretation) && rhs().evaluate(interpretation);
    case Kind::kOr:
      return lhs().evaluate(interpretation) || rhs().evaluate(interpretation);
    case Kind::kImplies:
      return !lhs().evaluate(interpretation) || rhs().evaluate(interpretation);
    case Kind::kIff:
      return lhs().evaluate(interpretation) == rhs().evaluate(interpretation);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff:
      return 1;
    case Formula::Kind::kImplies:
      return 2;
    case Formula::Kind::kOr:
      return 3;
    case Formula::Kind::kAnd:
      return 4;
    default:
      return 5;
  }
}

const char* symbol(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff:
      return " <-> ";
    case Formula::Kind::kImplies:
      return " -> ";
    case Formula::Kind::kOr:
      return " | ";
    default:
      return " & ";
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      out += "true";
      return;
    case Formula::Kind::kFalse:
      out += "false";
      return;
    case Formula::Kind::kAtom:
      out += f.name();
      return;
    case Formula::Kind::kNot:
      out += '!';
      print_child(f.operand(), f.operand().is_binary(), out);
      return;
    default:
      break;
  }
  const int prec = precedence(f.kind());
  const bool right_assoc = f.kind() == Formula::Kind::kImplies;
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  print_child(f.lhs(), lp < prec || (lp == prec && right_assoc), out);
  out += symbol(f.kind());
  print_child(f.rhs(), rp < prec || (rp == prec && !right_assoc), out);
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return std::strong_ordering::equal;
    case Formula::Kind::kAtom:
      return a.name() <=> b.name();
    case Formula::Kind::kNot:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::disjunction(a, b); }

// ---------------------------------------------------------------------------
// Interpretation

Interpretation::Interpretation(std::vector<std::string> atoms, std::vector<bool> values) {
  if (atoms.size() != values.size()) {
    throw PreconditionError("interpretation: atoms and values differ in length");
  }
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return atoms[x] < atoms[y]; });
  for (std::size_t i : order) {
    if (!atoms_.empty() && atoms_.back() == atoms[i]) {
      if (values_.back() != values[i]) {
        throw PreconditionError("interpretation: conflicting values for " + atoms[i]);
      }
      continue;
    }
    atoms_.push_back(atoms[i]);
    values_.push_back(values[i]);
  }
}

bool Interpretation::contains(std::string_view atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

bool Interpretation::value(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) {
    throw PreconditionError("interpretation does not assign atom '" + std::string(atom) + "'");
  }
  return values_[static_cast<std::size_t>(it - atoms_.begin())];
}

Formula Interpretation::to_formula() const {
  std::vector<Formula> literals;
  literals.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    Formula a = Formula::atom(atoms_[i]);
    literals.push_back(values_[i] ? a : !a);
  }
  return Formula::conjunction_of(literals);
}

std::string Interpretation::to_string() const { return to_formula().to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { kIdent, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kIff, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent:
      return "atom";
    case Tok::kTrue:
      return "'true'";
    case Tok::kFalse:
      return "'false'";
    case Tok::kNot:
      return "'!'";
    case Tok::kAnd:
      return "'&'";
    case Tok::kOr:
      return "'|'";
    case Tok::kImplies:
      return "'->'";
    case Tok::kIff:
      return "'<->'";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kEnd:
      return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    column += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t start_col = column;
    auto push = [&](Tok kind, std::size_t len) {
      tokens.push_back({kind, std::string(text.substr(i, len)), line, start_col});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) || text[i + len] == '_')) {
        ++len;
      }
      const std::string_view word = text.substr(i, len);
      push(word == "true" ? Tok::kTrue : word == "false" ? Tok::kFalse : Tok::kIdent, len);
      continue;
    }
    switch (c) {
      case '!':
        push(Tok::kNot, 1);
        continue;
      case '&':
        push(Tok::kAnd, 1);
        continue;
      case '|':
        push(Tok::kOr, 1);
        continue;
      case '(':
        push(Tok::kLParen, 1);
        continue;
      case ')':
        push(Tok::kRParen, 1);
        continue;
      case '-':
        if (text.substr(i, 2) == "->") {
          push(Tok::kImplies, 2);
          continue;
        }
        break;
      case '<':
        if (text.substr(i, 3) == "<->") {
          push(Tok::kIff, 3);
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError("unknown token '" + std::string(1, c) + "'", line, start_col);
  }
  tokens.push_back({Tok::kEnd, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != Tok::kEnd) unexpected("end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void unexpected(const std::string& wanted) const {
    const Token& t = peek();
    std::string got = describe(t.kind);
    if (t.kind == Tok::kIdent) got += " '" + t.text + "'";
    throw ParseError("expected " + wanted + ", found " + got, t.line, t.column);
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::kIff)) f = Formula::equivalence(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::kImplies)) return Formula::implication(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::kOr)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (accept(Tok::kAnd)) f = Formula::conjunction(f, parse_not());
    return f;
  }

  Formula parse_not() {
    switch (peek().kind) {
      case Tok::kNot:
        take();
        return Formula::negation(parse_not());
      case Tok::kIdent:
        return Formula::atom(take().text);
      case Tok::kTrue:
        take();
        return Formula::truth();
      case Tok::kFalse:
        take();
        return Formula::falsity();
      case Tok::kLParen: {
        take();
        Formula f = parse_iff();
        if (!accept(Tok::kRParen)) unexpected("')'");
        return f;
      }
      default:
        unexpected("a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace argkb
