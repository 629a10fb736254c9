#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "argkb/kb_io.hpp"
#include "cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

std::string data(const char* name) { return std::string(ARGKB_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = argkb::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("query arg on the A-conflict base returns the argument for D") {
  const auto r = run({"query", data("conflict.kb"), "--relation", "arg", "D", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["holds"] == true);
  REQUIRE(j["arguments_for"].size() == 1);
  CHECK(j["arguments_for"][0]["indices"] == nlohmann::json::array({0, 5}));
  CHECK(j["arguments_for"][0]["formulas"] == nlohmann::json::array({"A", "!A | D"}));
  CHECK_FALSE(j.contains("weight"));
}

TEST_CASE("a contradiction never holds") {
  CHECK(run({"query", data("conflict.kb"), "--relation", "arg", "X & !X"}).status == 1);
  CHECK(run({"query", data("conflict.kb"), "--relation", "lex", "!A"}).status == 0);
  CHECK(run({"query", data("conflict.kb"), "--relation", "arg", "!A"}).status == 1);
}

TEST_CASE("check reports the inconsistency level of a layered base") {
  const auto r = run({"check", data("layered.kb"), "--json"});
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == false);
  CHECK(j["inconsistency_level"] == 0.6);
  CHECK(j["layers"] == 8);

  const auto human = run({"check", data("layered.kb")});
  CHECK(human.out.find("inconsistency level: 0.6") != std::string::npos);

  CHECK(run({"check", data("source_a.kb")}).status == 2);  // top weight below 1
}

TEST_CASE("argument indices resolve against the loaded base") {
  const auto kb = argkb::load_kb(data("layered.kb"));
  for (const char* rel : {"pi", "pifree", "pref", "lexs", "args", "arg", "lex"}) {
    const auto r = run({"query", data("layered.kb"), "--relation", rel, "D", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    for (const char* side : {"arguments_for", "arguments_against"}) {
      for (const auto& a : j[side]) {
        REQUIRE(a["indices"].size() == a["formulas"].size());
        for (std::size_t k = 0; k < a["indices"].size(); ++k) {
          CHECK(kb.flat()[a["indices"][k].get<std::size_t>()].to_string() == a["formulas"][k].get<std::string>());
        }
      }
    }
  }
}

TEST_CASE("stratified query reports weights and layers") {
  const auto r = run({"query", data("layered.kb"), "--relation", "args", "D", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["weight"] == 0.4);
  CHECK(j["arguments_for"][0]["layers"] == nlohmann::json::array({1, 6}));
  CHECK(j["arguments_against"][0]["formulas"] == nlohmann::json::array({"!D"}));
}

TEST_CASE("json output round-trips and is deterministic") {
  const std::vector<std::string> args{"query", data("layered.kb"), "--queries", data("queries.txt"), "--relation",
                                      "pref", "--json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j.is_array());
  CHECK(j.size() == 3);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("batch exit status is 0 only when every query holds") {
  CHECK(run({"query", data("conflict.kb"), "--queries", data("queries.txt")}).status == 1);
  CHECK(run({"query", data("conflict.kb"), "D", "!A | D"}).status == 0);
}

TEST_CASE("para prints the biweighted base and its saturation") {
  const auto r = run({"para", data("layered.kb")});
  CHECK(r.status == 0);
  CHECK(r.out.find("# biweighted base\n") == 0);
  CHECK(r.out.find("A @ 1 ; 0.6") != std::string::npos);
  CHECK(r.out.find("# saturation\n") != std::string::npos);
  CHECK(r.out.find("E @ 0.7 ; 0.6") != std::string::npos);

  const auto q = run({"query", data("layered.kb"), "--relation", "para", "E", "--json"});
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["holds"] == true);
  CHECK(j["weight"] == 0.7);
  CHECK(run({"query", data("layered.kb"), "--relation", "para", "A & B"}).status == 2);
}

TEST_CASE("merge tags each accepted query with its source") {
  const auto r = run({"merge", "--source", data("source_a.kb"), "--source", data("source_b.kb"), "--queries",
                      data("merge_queries.txt"), "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["holds"] == true);
  CHECK(j["results"][0]["source"] == data("source_a.kb"));
  CHECK(j["results"][1]["holds"] == true);
  CHECK(j["results"][1]["source"] == data("source_b.kb"));
  CHECK(j["results"][2]["holds"] == false);

  const auto am = run({"query", "--relation", "am", "--source", data("source_a.kb"), "--source",
                       data("source_b.kb"), "!A"});
  CHECK(am.status == 1);
}

TEST_CASE("subset structures") {
  const auto mcs = run({"mcs", data("conflict.kb"), "--json"});
  CHECK(nlohmann::json::parse(mcs.out)["subsets"].size() == 5);
  const auto mus = run({"mus", data("conflict.kb"), "--json"});
  CHECK(nlohmann::json::parse(mus.out)["subsets"].size() == 2);
  const auto free = run({"freebase", data("conflict.kb")});
  CHECK(free.out == "{5}  !A | D\n");
  const auto pis = run({"prime-implicates", data("conflict.kb"), "--json"});
  CHECK(nlohmann::json::parse(pis.out)["prime_implicates"].size() >= 1);
}

TEST_CASE("errors map to exit codes") {
  const auto missing = run({"check", data("no_such.kb")});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const auto bad = run({"check", data("bad.kb")});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("bad.kb:2:8:") != std::string::npos);

  CHECK(run({"query", data("conflict.kb"), "--relation", "nope", "D"}).status == 2);
  CHECK(run({"query", data("conflict.kb"), "D & ("}).status == 2);
  CHECK(run({}).status == 2);

  const auto capped = run({"query", data("conflict.kb"), "D", "--max-subsets", "2", "--json"});
  CHECK(capped.status == 3);
  CHECK(nlohmann::json::parse(capped.out)["caps_hit"] == true);
  CHECK(run({"mcs", data("conflict.kb"), "--max-atoms", "2"}).status == 3);
}
