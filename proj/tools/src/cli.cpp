#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "argkb/errors.hpp"
#include "argkb/flat_inference.hpp"
#include "argkb/kb_io.hpp"
#include "argkb/merge.hpp"
#include "argkb/paraconsistent.hpp"
#include "argkb/sat.hpp"
#include "argkb/stratified_inference.hpp"
#include "argkb/subsets.hpp"

namespace argkb::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> positional;
  std::string relation = "arg";
  bool json = false;
  bool timing = false;
  std::size_t max_subsets = Limits{}.max_subset_checks;
  std::size_t max_atoms = Limits{}.max_atoms;
  std::vector<std::string> sources;
  std::string queries;

  Limits limits() const {
    Limits l;
    l.max_subset_checks = max_subsets;
    l.max_atoms = max_atoms;
    return l;
  }
};

Json as_number(Weight w) {
  if (w == Weight::zero()) return 0;
  if (w == Weight::one()) return 1;
  return std::stod(w.to_string());
}

LoadedKB load(const std::string& path, TopWeight top = TopWeight::kMustBeOne) {
  try {
    return load_kb(path, top);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  } catch (const InvalidKnowledgeBase& e) {
    throw Error(path + ": " + e.what());
  }
}

Formula parse_goal(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw Error("goal '" + text + "': " + e.what());
  }
}

std::vector<std::string> read_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::string join(const std::vector<Formula>& formulas) {
  std::string s;
  for (const auto& f : formulas) s += (s.empty() ? "" : ", ") + f.to_string();
  return s;
}

Json indices_json(const SubsetRef& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

Json formulas_json(const std::vector<Formula>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

Json subset_json(const FlatKB& kb, const SubsetRef& s) {
  return Json{{"indices", indices_json(s)}, {"formulas", formulas_json(kb.select(s))}};
}

// `layered` is set when the loaded file is stratified; layers are 1-based.
Json argument_json(const Argument& a, const FlatKB& kb, const StratifiedKB* layered) {
  Json j = subset_json(kb, a.support);
  if (a.weight) j["weight"] = as_number(*a.weight);
  if (layered) {
    Json layers = Json::array();
    for (auto i : a.support) layers.push_back(layered->layer_of(i) + 1);
    j["layers"] = layers;
  }
  return j;
}

void print_argument(std::ostream& out, const char* label, const Json& a) {
  out << "  " << label << " {";
  bool first = true;
  for (const auto& i : a["indices"]) {
    out << (first ? "" : ",") << i.get<std::size_t>();
    first = false;
  }
  out << "}:";
  first = true;
  for (const auto& f : a["formulas"]) {
    out << (first ? " " : ", ") << f.get<std::string>();
    first = false;
  }
  if (a.contains("weight")) out << "  weight " << a["weight"].dump();
  if (a.contains("source")) out << "  source " << a["source"].get<std::string>();
  out << "\n";
}

void print_report(std::ostream& out, const Json& r) {
  out << "query: " << r["query"].get<std::string>() << "\n";
  out << "relation: " << r["relation"].get<std::string>() << "\n";
  if (r["caps_hit"].get<bool>()) {
    out << "verdict: unknown (cap exceeded)\n";
    return;
  }
  out << "verdict: " << (r["holds"].get<bool>() ? "holds" : "fails") << "\n";
  if (r.contains("weight")) out << "weight: " << r["weight"].dump() << "\n";
  if (r.contains("biweights")) {
    for (const auto& b : r["biweights"]) {
      out << "  biweight " << b["certainty"].dump() << " ; " << b["counter_certainty"].dump() << "\n";
    }
  }
  for (const auto& a : r["arguments_for"]) print_argument(out, "argument for", a);
  for (const auto& a : r["arguments_against"]) print_argument(out, "argument against", a);
  if (r.contains("timing_ms")) out << "time: " << r["timing_ms"].dump() << " ms\n";
}

std::optional<FlatRelation> flat_relation(const std::string& name) {
  if (name == "free") return FlatRelation::kFree;
  if (name == "universal") return FlatRelation::kUniversal;
  if (name == "lex") return FlatRelation::kLex;
  if (name == "exists") return FlatRelation::kExistential;
  if (name == "arg") return FlatRelation::kArgumentative;
  return std::nullopt;
}

std::optional<StratifiedRelation> stratified_relation(const std::string& name) {
  if (name == "pi") return StratifiedRelation::kPi;
  if (name == "pifree") return StratifiedRelation::kPiFree;
  if (name == "pref") return StratifiedRelation::kPreferred;
  if (name == "lexs") return StratifiedRelation::kLexStratified;
  if (name == "args") return StratifiedRelation::kArgumentative;
  return std::nullopt;
}

// Answers one goal and fills the verdict fields of `r`.
class Querier {
 public:
  Querier(const Options& o, std::optional<LoadedKB> kb, std::optional<SourceSet> sources)
      : options_(o), kb_(std::move(kb)), sources_(std::move(sources)) {
    if (kb_ && kb_->is_stratified()) layered_ = kb_->stratified();
  }

  void answer(const Formula& goal, Json& r) const {
    const std::string& rel = options_.relation;
    const Limits limits = options_.limits();
    const StratifiedKB* layered = layered_ ? &*layered_ : nullptr;
    if (auto fr = flat_relation(rel)) {
      const Verdict v = holds(kb_->flat(), goal, *fr, limits);
      r["holds"] = v.holds;
      for (const auto& a : v.arguments_for) r["arguments_for"].push_back(argument_json(a, kb_->flat(), layered));
      for (const auto& a : v.arguments_against) {
        r["arguments_against"].push_back(argument_json(a, kb_->flat(), layered));
      }
    } else if (auto sr = stratified_relation(rel)) {
      const StratifiedKB skb = kb_->stratified();
      const WeightedVerdict v = holds_stratified(skb, goal, *sr, limits);
      r["holds"] = v.holds;
      if (v.weight) r["weight"] = as_number(*v.weight);
      for (const auto& a : v.arguments_for) r["arguments_for"].push_back(argument_json(a, skb.flat(), &skb));
      for (const auto& a : v.arguments_against) r["arguments_against"].push_back(argument_json(a, skb.flat(), &skb));
    } else if (rel == "para") {
      answer_para(goal, r, limits);
    } else {
      answer_merge(goal, r, limits);
    }
  }

 private:
  void answer_para(const Formula& goal, Json& r, const Limits& limits) const {
    Clause clause;
    try {
      clause = clause_from_formula(goal);
    } catch (const PreconditionError&) {
      throw Error("relation para needs a clause goal, got '" + goal.to_string() + "'");
    }
    const auto pairs = para_query(kb_->stratified(), clause, limits);
    std::optional<Weight> best;
    r["biweights"] = Json::array();
    for (const auto& [a, b] : pairs) {
      r["biweights"].push_back({{"certainty", as_number(a)}, {"counter_certainty", as_number(b)}});
      if (a > b && (!best || a > *best)) best = a;
    }
    r["holds"] = best.has_value();
    if (best) r["weight"] = as_number(*best);
  }

  void answer_merge(const Formula& goal, Json& r, const Limits& limits) const {
    const MergeVerdict v = am_holds(*sources_, goal, limits);
    r["holds"] = v.holds;
    if (v.holds) r["weight"] = as_number(*v.weight);
    auto side = [&](const std::optional<Argument>& arg, const std::optional<std::string>& name, const char* key) {
      if (!arg) return;
      for (const auto& s : sources_->sources()) {
        if (s.name != *name) continue;
        Json j = argument_json(*arg, s.kb.flat(), &s.kb);
        j["source"] = s.name;
        r[key].push_back(j);
      }
    };
    side(v.argument_for, v.supporting_source, "arguments_for");
    side(v.argument_against, v.opposing_source, "arguments_against");
  }

  const Options& options_;
  std::optional<LoadedKB> kb_;
  std::optional<StratifiedKB> layered_;
  std::optional<SourceSet> sources_;
};

std::optional<SourceSet> load_sources(const Options& o) {
  if (o.sources.empty()) return std::nullopt;
  std::vector<Source> list;
  for (const auto& path : o.sources) list.push_back({path, load(path, TopWeight::kAnyPositive).stratified()});
  return SourceSet(std::move(list));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error("check takes exactly one knowledge-base file");
  const LoadedKB kb = load(o.positional[0]);
  const Limits limits = o.limits();
  const bool consistent = is_consistent(kb.flat(), kb.flat().all(), limits);
  Json j{{"file", o.positional[0]}, {"formulas", kb.flat().size()}, {"consistent", consistent}};
  if (kb.is_stratified()) {
    const StratifiedKB skb = kb.stratified();
    j["layers"] = skb.layer_count();
    j["inconsistency_level"] = as_number(inconsistency_level(skb, limits));
  }
  if (o.json) {
    emit(out, j);
  } else {
    out << (consistent ? "consistent" : "inconsistent") << "\n";
    out << "formulas: " << kb.flat().size() << "\n";
    if (j.contains("layers")) {
      out << "layers: " << j["layers"].dump() << "\n";
      out << "inconsistency level: " << j["inconsistency_level"].dump() << "\n";
    }
  }
  return consistent ? kHolds : kFails;
}

int cmd_query(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& rel = o.relation;
  if (!flat_relation(rel) && !stratified_relation(rel) && rel != "para" && rel != "am") {
    throw Error("unknown relation '" + rel + "'");
  }
  std::optional<LoadedKB> kb;
  std::vector<std::string> goals;
  if (rel == "am") {
    if (o.sources.empty()) throw Error("relation am needs at least one --source file");
    goals = o.positional;
  } else {
    if (o.positional.empty()) throw Error("query needs a knowledge-base file");
    kb = load(o.positional[0]);
    goals.assign(o.positional.begin() + 1, o.positional.end());
  }
  if (!o.queries.empty()) {
    for (auto& q : read_queries(o.queries)) goals.push_back(std::move(q));
  }
  if (goals.empty()) throw Error("no query given");
  const bool batch = !o.queries.empty() || goals.size() > 1;

  const Querier querier(o, std::move(kb), load_sources(o));
  Json reports = Json::array();
  int status = kHolds;
  for (const auto& text : goals) {
    const Formula goal = parse_goal(text);
    Json r{{"query", text}, {"relation", rel}, {"holds", false}, {"arguments_for", Json::array()},
           {"arguments_against", Json::array()}, {"caps_hit", false}};
    const auto start = std::chrono::steady_clock::now();
    try {
      querier.answer(goal, r);
      if (!r["holds"].get<bool>() && status == kHolds) status = kFails;
    } catch (const CapExceeded& e) {
      err << "argkb: " << text << ": " << e.what() << "\n";
      r = Json{{"query", text}, {"relation", rel}, {"holds", false}, {"arguments_for", Json::array()},
               {"arguments_against", Json::array()}, {"caps_hit", true}};
      status = kCapExceeded;
    }
    if (o.timing) {
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      r["timing_ms"] = took.count();
    }
    reports.push_back(std::move(r));
  }

  if (o.json) {
    emit(out, batch ? reports : reports[0]);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << "\n";
      print_report(out, reports[i]);
    }
  }
  return status;
}

int cmd_subsets(const std::string& command, const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error(command + " takes exactly one knowledge-base file");
  const LoadedKB kb = load(o.positional[0]);
  const FlatKB& flat = kb.flat();
  const Limits limits = o.limits();
  std::vector<SubsetRef> sets;
  if (command == "mcs") {
    sets = maximal_consistent_subsets(flat, limits);
  } else if (command == "mus") {
    sets = minimal_inconsistent_subsets(flat, limits);
  } else {
    sets = {free_base(flat, limits)};
  }
  if (o.json) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(subset_json(flat, s));
    emit(out, Json{{"command", command}, {"subsets", a}});
  } else {
    for (const auto& s : sets) out << s.to_string() << "  " << join(flat.select(s)) << "\n";
  }
  return kHolds;
}

int cmd_prime_implicates(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error("prime-implicates takes exactly one knowledge-base file");
  const LoadedKB kb = load(o.positional[0]);
  const auto pis = prime_implicates(kb.flat(), o.limits());
  if (o.json) {
    emit(out, Json{{"command", "prime-implicates"}, {"prime_implicates", formulas_json(pis)}});
  } else {
    for (const auto& p : pis) out << p.to_string() << "\n";
  }
  return kHolds;
}

Json para_json(const ParaBase& base) {
  Json a = Json::array();
  for (const auto& e : base.entries()) {
    a.push_back({{"clause", e.clause.to_string()},
                 {"certainty", as_number(e.certainty)},
                 {"counter_certainty", as_number(e.counter_certainty)}});
  }
  return a;
}

int cmd_para(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw Error("para takes exactly one knowledge-base file");
  const StratifiedKB kb = load(o.positional[0]).stratified();
  const Limits limits = o.limits();
  const ParaBase base = biweight_base(kb, limits);
  const ParaBase saturated = saturate(base, limits);
  if (o.json) {
    emit(out, Json{{"command", "para"},
                   {"inconsistency_level", as_number(inconsistency_level(kb, limits))},
                   {"biweighted", para_json(base)},
                   {"saturated", para_json(saturated)}});
  } else {
    out << "# biweighted base\n" << base.serialize();
    out << "# saturation\n" << saturated.serialize();
  }
  return kHolds;
}

int cmd_merge(const Options& o, std::ostream& out) {
  auto sources = load_sources(o);
  if (!sources) throw Error("merge needs at least one --source file");
  std::vector<std::string> texts = o.positional;
  if (!o.queries.empty()) {
    for (auto& q : read_queries(o.queries)) texts.push_back(std::move(q));
  }
  if (texts.empty()) throw Error("merge needs queries (positional or --queries FILE)");
  std::vector<Formula> goals;
  for (const auto& t : texts) goals.push_back(parse_goal(t));

  const Limits limits = o.limits();
  Json results = Json::array();
  for (std::size_t i = 0; i < goals.size(); ++i) {
    const MergeVerdict v = am_holds(*sources, goals[i], limits);
    Json r{{"query", texts[i]}, {"holds", v.holds}};
    if (v.weight) {
      r["weight"] = as_number(*v.weight);
      r["source"] = *v.supporting_source;
    }
    if (v.opposing_weight) {
      r["opposing_weight"] = as_number(*v.opposing_weight);
      r["opposing_source"] = *v.opposing_source;
    }
    results.push_back(std::move(r));
  }
  if (o.json) {
    Json names = Json::array();
    for (const auto& s : sources->sources()) names.push_back(s.name);
    emit(out, Json{{"command", "merge"}, {"sources", names}, {"results", results}});
  } else {
    for (const auto& r : results) {
      out << (r["holds"].get<bool>() ? "accepted  " : "rejected  ") << r["query"].get<std::string>();
      if (r.contains("weight")) {
        out << "  (" << r["weight"].dump() << " from " << r["source"].get<std::string>() << ")";
      }
      if (r.contains("opposing_weight")) {
        out << "  against " << r["opposing_weight"].dump() << " from " << r["opposing_source"].get<std::string>();
      }
      out << "\n";
    }
  }
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Argumentative inference over inconsistent knowledge bases", "argkb"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_relation) {
    sub->add_option("args", o.positional, "Knowledge-base file followed by goals");
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--max-subsets", o.max_subsets, "Cap on subset checks per operation");
    sub->add_option("--max-atoms", o.max_atoms, "Cap on vocabulary size");
    if (with_relation) {
      sub->add_option("--relation", o.relation, "free|universal|lex|exists|arg|pi|pifree|pref|lexs|args|para|am");
      sub->add_flag("--timing", o.timing, "Add per-query timing to the report");
    }
  };
  common(app.add_subcommand("check", "Report consistency and inconsistency level"), false);
  auto* query = app.add_subcommand("query", "Decide goals under one relation");
  common(query, true);
  query->add_option("--source", o.sources, "Merge source file (relation am)")->allow_extra_args(false);
  query->add_option("--queries", o.queries, "File with one goal per line");
  common(app.add_subcommand("mcs", "Maximal consistent subsets"), false);
  common(app.add_subcommand("mus", "Minimal inconsistent subsets"), false);
  common(app.add_subcommand("freebase", "Formulas outside every minimal conflict"), false);
  common(app.add_subcommand("prime-implicates", "Prime implicates of the maximal consistent subsets"), false);
  common(app.add_subcommand("para", "Biweighted base and its saturation"), false);
  auto* merge = app.add_subcommand("merge", "Merge sources on the given queries");
  common(merge, false);
  merge->add_option("--source", o.sources, "Source file (repeatable)")->allow_extra_args(false);
  merge->add_option("--queries", o.queries, "File with one query per line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "check") return cmd_check(o, out);
    if (command == "query") return cmd_query(o, out, err);
    if (command == "mcs" || command == "mus" || command == "freebase") return cmd_subsets(command, o, out);
    if (command == "prime-implicates") return cmd_prime_implicates(o, out);
    if (command == "para") return cmd_para(o, out);
    return cmd_merge(o, out);
  } catch (const CapExceeded& e) {
    err << "argkb: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "argkb: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace argkb::cli
