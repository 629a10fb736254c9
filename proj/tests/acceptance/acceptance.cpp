// Acceptance suite: one PASS/FAIL line per criterion, followed by the
// individual checks that make it up. `--criterion N` runs a single one.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "argkb/flat_inference.hpp"
#include "argkb/merge.hpp"
#include "argkb/paraconsistent.hpp"
#include "argkb/sat.hpp"
#include "argkb/stratified_inference.hpp"
#include "argkb/subsets.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace argkb;
using fixtures::F;
using fixtures::W;

namespace {

class Report {
 public:
  void check(bool ok, const std::string& what) {
    lines_.push_back((ok ? "    ok    " : "    FAIL  ") + what);
    pass_ = pass_ && ok;
  }
  void note(const std::string& what) { lines_.push_back("    note  " + what); }
  bool pass() const { return pass_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool pass_ = true;
  std::vector<std::string> lines_;
};

// Counts violations of named checks across a random suite.
class Tally {
 public:
  void expect(bool ok, const std::string& name, const std::string& detail = {}) {
    auto& e = entries_[name];
    ++e.checked;
    if (!ok) {
      ++e.violations;
      if (e.example.empty()) e.example = detail;
    }
  }
  void report(Report& r) const {
    for (const auto& [name, e] : entries_) {
      std::ostringstream line;
      line << name << ": " << e.violations << " violations in " << e.checked << " checks";
      if (!e.example.empty()) line << " (first: " << e.example << ")";
      r.check(e.violations == 0, line.str());
    }
  }

 private:
  struct Entry {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string example;
  };
  std::map<std::string, Entry> entries_;
};

std::string describe(const FlatKB& kb, const Formula& goal) {
  std::string s = "{";
  for (std::size_t i = 0; i < kb.size(); ++i) s += (i ? ", " : "") + kb[i].to_string();
  return s + "} ? " + goal.to_string();
}

std::string describe(const StratifiedKB& kb, const Formula& goal) {
  std::string s;
  for (const auto& l : kb.layers()) {
    s += "[" + l.weight.to_string() + ":";
    for (std::size_t i = 0; i < l.formulas.size(); ++i) s += (i ? ", " : " ") + l.formulas[i].to_string();
    s += "] ";
  }
  return s + "? " + goal.to_string();
}

bool model_equivalent(const Formula& a, const Formula& b, const std::vector<std::string>& vocabulary) {
  return oracle::table(a, vocabulary) == oracle::table(b, vocabulary);
}

std::vector<SubsetRef> refs(std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<SubsetRef> out;
  for (auto s : sets) out.emplace_back(s);
  return out;
}

bool verdict(const FlatKB& kb, const char* goal, FlatRelation r) { return holds(kb, F(goal), r).holds; }
bool verdict(const StratifiedKB& kb, const char* goal, StratifiedRelation r) {
  return holds_stratified(kb, F(goal), r).holds;
}

// 1 -------------------------------------------------------------------------
Report flat_golden() {
  Report r;
  const FlatKB kb = fixtures::conflict_around_a();
  r.check(lex_subsets(kb) == refs({{1, 2, 3, 4, 5}}), "Lex = {!B | !A, B, !C | !A, C, !A | D}");
  r.check(verdict(kb, "!A", FlatRelation::kLex), "!A passes Lex");
  r.check(!verdict(kb, "!A", FlatRelation::kArgumentative), "!A fails Argumentative");
  r.check(verdict(kb, "D", FlatRelation::kArgumentative), "D passes Argumentative");
  r.check(!verdict(kb, "D", FlatRelation::kLex), "D fails Lex");
  const auto d = find_argument(kb, F("D"));
  r.check(d && d->support == SubsetRef{0, 5}, "argument for D is {A, !A | D}");
  return r;
}

// 2 -------------------------------------------------------------------------
Report prime_implicate_golden() {
  Report r;
  const std::vector<std::string> abc{"A", "B", "C"};
  {
    const FlatKB kb = fixtures::two_views();
    const auto mc = maximal_consistent_subsets(kb);
    r.check(mc == refs({{0, 1, 2}, {0, 1, 3}}), "two views: two maximal consistent subsets");
    auto model_list = [&](const SubsetRef& s) {
      std::vector<Formula> out;
      for (const auto& m : enumerate_models(kb.select(s), abc)) out.push_back(m.to_formula());
      return out;
    };
    r.check(mc.size() == 2 && model_list(mc[0]) == fixtures::formulas({"A & B & !C", "A & B & C"}),
            "two views: models of the first subset are {A B !C, A B C}");
    r.check(mc.size() == 2 && model_list(mc[1]) == fixtures::formulas({"!A & !B & C", "!A & B & C"}),
            "two views: models of the second subset are {!A !B C, !A B C}");
    const auto pis = prime_implicates(kb);
    const auto expected = fixtures::formulas(
        {"B & (C | A)", "(A & B) | (!B & C & !A)", "C & (!A | B)", "(!A & C) | (!C & A & B)"});
    bool all_found = pis.size() == 4;
    for (const auto& e : expected) {
      all_found = all_found && std::any_of(pis.begin(), pis.end(),
                                           [&](const Formula& p) { return model_equivalent(p, e, abc); });
    }
    std::string shown;
    for (const auto& p : pis) shown += (shown.empty() ? "" : "; ") + p.to_string();
    r.check(all_found, "two views: four prime implicates equivalent to the reference set [" + shown + "]");
  }
  {
    const FlatKB kb = fixtures::complete_views();
    const auto pis = prime_implicates(kb);
    r.check(pis.size() == 1 && model_equivalent(pis[0], F("B & C"), abc),
            "complete views: single prime implicate equivalent to B & C");
  }
  {
    const auto pis = prime_implicates(fixtures::flat({"A", "!A"}));
    r.check(pis.size() == 1 && pis[0].kind() == Formula::Kind::kTrue, "{A, !A}: only the tautology");
  }
  {
    const FlatKB kb = fixtures::four_views();
    r.check(maximal_consistent_subsets(kb) == refs({{0, 1, 4, 5}, {0, 3, 4, 5}, {1, 2, 4}, {2, 3, 4, 5}}),
            "six-formula base: the four maximal consistent subsets");
    const auto goals = fixtures::hidden_conflict_goals();
    bool each = true;
    for (const auto& g : goals) each = each && holds(kb, g, FlatRelation::kArgumentative).holds;
    r.check(each, "six-formula base: phi1, phi2, phi3 each pass Argumentative");
    r.check(entails(goals, Formula::falsity()), "six-formula base: phi1 & phi2 & phi3 |- false");
  }
  return r;
}

// 3 -------------------------------------------------------------------------
Report stratified_golden() {
  Report r;
  using R = StratifiedRelation;
  r.check(!verdict(fixtures::drowning(), "C", R::kPi), "drowning: C fails Pi");
  r.check(verdict(fixtures::drowning(), "C", R::kPiFree), "drowning: C passes PiFree");
  r.check(!verdict(fixtures::penguin(), "w", R::kPi), "penguin: w fails Pi");
  r.check(verdict(fixtures::penguin(), "w", R::kPiFree), "penguin: w passes PiFree");
  const StratifiedKB kb = fixtures::layered_conflict();
  r.check(preferred_subbases(kb).size() == 3, "layered conflict: Pref has 3 members");
  r.check(lex_subbases(kb) == refs({{1, 2, 3, 4, 5}}), "layered conflict: Lex has 1 member");
  r.check(verdict(kb, "!A", R::kLexStratified), "layered conflict: !A passes LexStratified");
  r.check(!verdict(kb, "!A", R::kArgumentative), "layered conflict: !A fails Argumentative");
  r.check(verdict(kb, "D", R::kArgumentative), "layered conflict: D passes Argumentative");
  r.check(!verdict(kb, "D", R::kPreferred), "layered conflict: D fails Preferred");
  r.check(verdict(fixtures::killed_argument(), "!D", R::kPreferred), "{{A},{!A},{!A | !D, A | D}}: !D passes Preferred");
  r.check(!verdict(fixtures::killed_argument(), "!D", R::kArgumentative),
          "{{A},{!A},{!A | !D, A | D}}: !D fails Argumentative");
  return r;
}

// 4 -------------------------------------------------------------------------
Report biweight_golden() {
  Report r;
  const StratifiedKB kb = fixtures::biweight_base();
  r.check(inconsistency_level(kb) == W("0.6"), "inconsistency level is exactly 0.6");

  const ParaBase base = biweight_base(kb);
  auto show = [&](const char* clause) {
    std::string s;
    for (const auto& [a, b] : base.frontier(parse_clause(clause))) {
      s += (s.empty() ? "" : ", ") + ("(" + a.to_string() + " " + b.to_string() + ")");
    }
    return s.empty() ? std::string("none") : s;
  };
  struct Expected {
    const char* clause;
    const char* a;
    const char* b;
  };
  for (const Expected e : {Expected{"A", "1", "0.6"}, Expected{"!A | B", "0.8", "0.6"}, Expected{"!A | C", "0.5", "0"},
                           Expected{"D", "0.4", "0.3"}, Expected{"!A | E", "0.7", "0"}, Expected{"F", "1", "0.2"}}) {
    const bool ok = base.frontier(parse_clause(e.clause)) ==
                    std::vector<std::pair<Weight, Weight>>{{W(e.a), W(e.b)}};
    r.check(ok, std::string("biweight (") + e.clause + " " + e.a + " " + e.b + "), computed " + show(e.clause));
  }
  r.check(base.frontier(parse_clause("B")) == std::vector<std::pair<Weight, Weight>>{{W("0.8"), W("0.6")}},
          "flip of !B yields (B 0.8 0.6), asserted as the rule output");

  struct Resolution {
    BiWeightedClause first;
    BiWeightedClause second;
    BiWeightedClause expected;
  };
  auto bw = [](const char* c, const char* a, const char* b) { return BiWeightedClause{parse_clause(c), W(a), W(b)}; };
  const ParaBase saturated = saturate(base);
  for (const auto& res : {Resolution{bw("A", "1", "0.6"), bw("!A | C", "0.5", "0"), bw("C", "0.6", "0.6")},
                          Resolution{bw("A", "1", "0.6"), bw("!A | E", "0.7", "0"), bw("E", "0.7", "0.6")},
                          Resolution{bw("F", "1", "0.2"), bw("!F | G", "0.5", "0"), bw("G", "0.5", "0.2")},
                          Resolution{bw("!H | I", "0.3", "0"), bw("H", "0.4", "0"), bw("I", "0.3", "0")}}) {
    r.check(para_resolve(res.first, res.second) == res.expected && saturated.contains(res.expected),
            "resolution yields (" + res.expected.to_string() + ") and saturation contains it");
  }

  // Symbolic base: compare the rule's (alpha', beta') for A and !A | B with the
  // reference min/max expressions under random distinct weights, largest = 1.
  gen::Generator g(1996);
  std::size_t a_mismatch = 0;
  std::size_t ab_mismatch = 0;
  std::string first_a;
  std::string first_ab;
  for (int round = 0; round < 100; ++round) {
    std::set<std::int64_t> picked;
    while (picked.size() < 6) picked.insert(static_cast<std::int64_t>(g.uniform(1, 99)) * 10'000'000);
    std::vector<Weight> w;
    for (auto u : picked) w.push_back(Weight::from_units(u));
    std::shuffle(w.begin(), w.end(), g.engine());
    *std::max_element(w.begin(), w.end()) = Weight::one();
    const Weight alpha = w[0], beta = w[1], gamma = w[2], delta = w[3];
    const auto sources = source_biweights(fixtures::symbolic_base(w));
    auto find = [&](const char* text) {
      for (const auto& s : sources) {
        if (s.formula == F(text)) return s;
      }
      throw std::logic_error("missing source formula");
    };
    auto tuple = [](Weight a, Weight b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; };
    std::string weights;
    for (const auto& x : w) weights += (weights.empty() ? "" : " ") + x.to_string();
    const auto a = find("A");
    if (a.certainty != beta || a.counter_certainty != std::min(alpha, gamma)) {
      if (a_mismatch++ == 0) {
        first_a = "weights " + weights + ": rule " + tuple(a.certainty, a.counter_certainty) + " vs reference " +
                  tuple(beta, std::min(alpha, gamma));
      }
    }
    const auto ab = find("!A | B");
    if (ab.certainty != std::max(alpha, delta) || ab.counter_certainty != std::min(beta, gamma)) {
      if (ab_mismatch++ == 0) {
        first_ab = "weights " + weights + ": rule " + tuple(ab.certainty, ab.counter_certainty) + " vs reference " +
                   tuple(std::max(alpha, delta), std::min(beta, gamma));
      }
    }
  }
  r.check(a_mismatch == 0, "symbolic (A, beta, min(alpha, gamma)): " + std::to_string(a_mismatch) +
                               " of 100 assignments differ" + (first_a.empty() ? "" : "; first " + first_a));
  r.check(ab_mismatch == 0, "symbolic (!A | B, max(alpha, delta), min(beta, gamma)): " + std::to_string(ab_mismatch) +
                                " of 100 assignments differ" + (first_ab.empty() ? "" : "; first " + first_ab));
  return r;
}

// 5 -------------------------------------------------------------------------
Report flat_hierarchy() {
  Report r;
  Tally t;
  gen::Generator g(501);
  std::size_t queries = 0;
  for (int round = 0; round < 200; ++round) {
    const FlatKB kb = g.flat_kb(8, 6);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(kb.vocabulary());
      const auto v = holds_all(kb, goal);
      const bool fr = v[0].holds, un = v[1].holds, lx = v[2].holds, ex = v[3].holds, ar = v[4].holds;
      const std::string d = describe(kb, goal);
      t.expect(!fr || un, "Free => Universal", d);
      t.expect(!un || lx, "Universal => Lex", d);
      t.expect(!un || ar, "Universal => Argumentative", d);
      t.expect(!lx || ex, "Lex => Existential", d);
      t.expect(!ar || ex, "Argumentative => Existential", d);
      const auto o = oracle::flat_verdicts(oracle::World(kb.formulas(), {goal}), goal);
      t.expect(fr == o.free && un == o.universal && lx == o.lex && ex == o.existential && ar == o.argumentative,
               "verdicts equal the power-set oracle", d);
      ++queries;
    }
  }
  r.note(std::to_string(queries) + " queries over 200 random bases");
  t.report(r);
  return r;
}

// 6 -------------------------------------------------------------------------
Report stratified_hierarchy() {
  Report r;
  Tally t;
  gen::Generator g(601);
  std::size_t queries = 0;
  for (int round = 0; round < 200; ++round) {
    const StratifiedKB kb = g.stratified_kb(3, 7, 6);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(kb.vocabulary());
      const auto pi = holds_stratified(kb, goal, StratifiedRelation::kPi);
      const bool pf = holds_stratified(kb, goal, StratifiedRelation::kPiFree).holds;
      const bool pr = holds_stratified(kb, goal, StratifiedRelation::kPreferred).holds;
      const bool lx = holds_stratified(kb, goal, StratifiedRelation::kLexStratified).holds;
      const auto ar = holds_stratified(kb, goal, StratifiedRelation::kArgumentative);
      const auto layered = decide_by_layers(kb, goal);
      const std::string d = describe(kb, goal);
      t.expect(!pi.holds || pf, "Pi => PiFree", d);
      t.expect(!pf || pr, "PiFree => Preferred", d);
      t.expect(!pf || ar.holds, "PiFree => Argumentative", d);
      t.expect(!pr || lx, "Preferred => LexStratified", d);
      t.expect(!pi.holds || (ar.holds && ar.weight == pi.weight), "Pi => Argumentative at the same weight", d);
      t.expect(layered.holds == ar.holds && layered.weight == ar.weight, "decide_by_layers == Argumentative", d);
      const auto o = oracle::stratified_verdicts(oracle::layered(kb, {goal}), goal);
      t.expect(pi.holds == o.pi && pi.weight == o.pi_weight && pf == o.pifree && pr == o.preferred && lx == o.lex &&
                   ar.holds == o.argumentative && ar.weight == o.argumentative_weight,
               "verdicts equal the power-set oracle", d);
      ++queries;
    }
  }
  r.note(std::to_string(queries) + " queries over 200 random layered bases");
  t.report(r);
  return r;
}

// 7 -------------------------------------------------------------------------
Report rule_grid() {
  Report r;
  Tally t;
  std::size_t admissible = 0;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= 10; ++c) {
        for (int d = 0; d <= c; ++d) {
          ++admissible;
          const Weight wa = Weight::from_ratio(a, 10), wb = Weight::from_ratio(b, 10);
          const Weight wc = Weight::from_ratio(c, 10), wd = Weight::from_ratio(d, 10);
          const auto res = para_resolve({parse_clause("X | P"), wa, wb}, {parse_clause("!P | Y"), wc, wd});
          const std::string q = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                                std::to_string(d) + " tenths";
          t.expect(res.certainty >= res.counter_certainty, "epsilon' >= rho'", q);
          t.expect(std::min(res.certainty, res.counter_certainty) == std::max(wb, wd),
                   "min(epsilon', rho') = max(beta', delta')", q);
          if (b == 0 && d == 0) {
            t.expect(res.certainty == std::min(wa, wc) && res.counter_certainty == Weight::zero(),
                     "degenerates to (min(alpha', gamma'), 0)", q);
          }
        }
      }
    }
  }
  r.check(admissible == 4356, std::to_string(admissible) + " admissible quadruples");
  t.report(r);
  return r;
}

// 8 -------------------------------------------------------------------------
Report no_mutual_contradiction() {
  Report r;
  Tally t;
  gen::Generator g(801);
  for (int round = 0; round < 200; ++round) {
    const FlatKB kb = g.flat_kb(8, 6);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(kb.vocabulary());
      t.expect(!(holds(kb, goal, FlatRelation::kArgumentative).holds &&
                 holds(kb, !goal, FlatRelation::kArgumentative).holds),
               "flat: never both g and !g", describe(kb, goal));
    }
  }
  for (int round = 0; round < 200; ++round) {
    const StratifiedKB kb = g.stratified_kb(3, 7, 6);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(kb.vocabulary());
      t.expect(!(holds_stratified(kb, goal, StratifiedRelation::kArgumentative).holds &&
                 holds_stratified(kb, !goal, StratifiedRelation::kArgumentative).holds),
               "stratified: never both g and !g", describe(kb, goal));
    }
  }
  for (int round = 0; round < 200; ++round) {
    std::vector<Source> list;
    std::vector<std::string> vocab;
    const std::size_t n = g.uniform(1, 4);
    for (std::size_t i = 0; i < n; ++i) {
      list.push_back({"s" + std::to_string(i), g.stratified_kb(3, 4, 4)});
      for (const auto& a : list.back().kb.vocabulary()) vocab.push_back(a);
    }
    std::sort(vocab.begin(), vocab.end());
    vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());
    const SourceSet sources(list);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(vocab);
      t.expect(!(am_holds(sources, goal).holds && am_holds(sources, !goal).holds), "merge: never both g and !g",
               goal.to_string());
    }
  }
  t.report(r);
  return r;
}

// 9 -------------------------------------------------------------------------
Report consistency_degeneration() {
  Report r;
  Tally t;
  gen::Generator g(901);
  for (int round = 0; round < 100; ++round) {
    const FlatKB kb = g.consistent_kb(8, 6);
    for (int k = 0; k < 5; ++k) {
      const Formula goal = g.goal(kb.vocabulary());
      const bool classical = entails(kb.formulas(), goal);
      const auto v = holds_all(kb, goal);
      bool agree = true;
      for (const auto& x : v) agree = agree && x.holds == classical;
      t.expect(agree, "flat: all five relations equal classical entailment", describe(kb, goal));

      // Spread the same formulas over random layers.
      std::vector<std::vector<Formula>> groups(g.uniform(1, std::min<std::size_t>(3, kb.size())));
      for (std::size_t i = 0; i < kb.size(); ++i) {
        groups[i < groups.size() ? i : g.uniform(0, groups.size() - 1)].push_back(kb[i]);
      }
      const StratifiedKB skb = StratifiedKB::with_default_weights(groups);
      const auto pi = holds_stratified(skb, goal, StratifiedRelation::kPi);
      const auto ar = holds_stratified(skb, goal, StratifiedRelation::kArgumentative);
      t.expect(pi.holds == ar.holds && pi.weight == ar.weight, "stratified: Argumentative equals Pi with weights",
               describe(skb, goal));
    }
  }
  t.report(r);
  return r;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Report()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "flat golden: Lex versus Argumentative on the A-conflict base", flat_golden},
      {2, "prime implicates and maximal consistent subsets of the worked flat bases", prime_implicate_golden},
      {3, "stratified golden: drowning, penguin, Pref/Lex and killed arguments", stratified_golden},
      {4, "biweighted base, resolution outputs and symbolic biweights", biweight_golden},
      {5, "flat hierarchy on random bases against the power-set oracle", flat_hierarchy},
      {6, "stratified hierarchy on random layered bases", stratified_hierarchy},
      {7, "paraconsistent rule identities on the tenths grid", rule_grid},
      {8, "no mutual contradiction in flat, stratified and merged verdicts", no_mutual_contradiction},
      {9, "consistent bases degenerate to classical and pi entailment", consistency_degeneration},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Report rep;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.id << " " << (rep.pass() ? "PASS" : "FAIL") << "  " << c.title << "\n";
    for (const auto& line : rep.lines()) std::cout << line << "\n";
    all = all && rep.pass();
  }
  if (!ran) {
    std::cerr << "unknown criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
