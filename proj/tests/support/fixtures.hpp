#pragma once

// Knowledge bases used across the unit, property and acceptance suites.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/knowledge_base.hpp"
#include "argkb/weight.hpp"

namespace fixtures {

inline argkb::Formula F(const std::string& text) { return argkb::parse_formula(text); }
inline argkb::Weight W(const std::string& text) { return argkb::Weight::parse(text); }

inline std::vector<argkb::Formula> formulas(std::initializer_list<const char*> texts) {
  std::vector<argkb::Formula> out;
  for (const char* t : texts) out.push_back(F(t));
  return out;
}

inline argkb::FlatKB flat(std::initializer_list<const char*> texts) { return argkb::FlatKB(formulas(texts)); }

inline argkb::StratifiedKB layered(std::initializer_list<std::initializer_list<const char*>> layers) {
  std::vector<std::vector<argkb::Formula>> groups;
  for (auto l : layers) groups.push_back(formulas(l));
  return argkb::StratifiedKB::with_default_weights(std::move(groups));
}

inline argkb::StratifiedKB weighted(std::initializer_list<std::pair<const char*, std::initializer_list<const char*>>> layers,
                                    argkb::TopWeight top = argkb::TopWeight::kMustBeOne) {
  std::vector<argkb::StratifiedKB::Layer> out;
  for (const auto& [w, l] : layers) out.push_back({W(w), formulas(l)});
  return argkb::StratifiedKB(std::move(out), top);
}

// Six formulas, two conflicts around A.
inline argkb::FlatKB conflict_around_a() { return flat({"A", "!B | !A", "B", "!C | !A", "C", "!A | D"}); }

inline argkb::FlatKB two_views() { return flat({"!A | B", "A | C", "A", "!A"}); }

inline argkb::FlatKB complete_views() { return flat({"!A | B", "A | B", "A", "!A", "C"}); }

inline argkb::FlatKB four_views() { return flat({"!A", "!B", "A", "B", "!C | !D", "!A | B"}); }

inline std::vector<argkb::Formula> hidden_conflict_goals() {
  return {F("(!A & !B & (!C | !D)) | (!C & D & (A | B))"), F("(!A & B & (!C | !D)) | (C & !D & (A | !B))"),
          F("(A & B & (!C | !D)) | (!C & !D & (!A | !B))")};
}

inline argkb::StratifiedKB drowning() { return layered({{"!A | !B"}, {"A"}, {"B"}, {"C"}}); }

inline argkb::StratifiedKB penguin() {
  return layered({{"p"}, {"!p | b", "!p | !f"}, {"!b | f", "!b | w"}});
}

inline argkb::StratifiedKB layered_conflict() {
  return layered({{"A", "!B | !A", "B", "C"}, {"!C | !A"}, {"!A | D"}});
}

inline argkb::StratifiedKB killed_argument() { return layered({{"A"}, {"!A"}, {"!A | !D", "A | D"}}); }

// Twelve weighted formulas; (H 0.4) stands where the source list prints I.
inline argkb::StratifiedKB biweight_base() {
  return weighted({{"1", {"A", "F"}},
                   {"0.8", {"!A | B"}},
                   {"0.7", {"!A | E"}},
                   {"0.6", {"!B"}},
                   {"0.5", {"!A | C", "!F | G"}},
                   {"0.4", {"!A | D", "H"}},
                   {"0.3", {"!D", "!H | I"}},
                   {"0.2", {"!F"}}});
}

/// The six-formula symbolic base with weights alpha, beta, gamma, delta,
/// epsilon, rho for !A|B, A, !B, B, !B|C, !C. Weights must be distinct and
/// the largest must be 1.
inline argkb::StratifiedKB symbolic_base(const std::vector<argkb::Weight>& w) {
  const char* names[] = {"!A | B", "A", "!B", "B", "!B | C", "!C"};
  std::vector<std::pair<argkb::Weight, std::string>> order;
  for (std::size_t i = 0; i < 6; ++i) order.emplace_back(w[i], names[i]);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<argkb::StratifiedKB::Layer> layers;
  for (const auto& [weight, text] : order) layers.push_back({weight, {F(text)}});
  return argkb::StratifiedKB(std::move(layers));
}

}  // namespace fixtures
