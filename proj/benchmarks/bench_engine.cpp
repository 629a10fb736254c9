#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "argkb/flat_inference.hpp"
#include "argkb/paraconsistent.hpp"
#include "argkb/subsets.hpp"

using namespace argkb;

namespace {

// A chain of atoms with every second link contradicted, so MC(kb) grows
// exponentially with the number of conflicts.
FlatKB conflict_chain(int conflicts) {
  std::vector<Formula> fs;
  for (int i = 0; i < conflicts; ++i) {
    const auto a = "P" + std::to_string(i);
    const auto b = "P" + std::to_string(i + 1);
    fs.push_back(parse_formula(a));
    fs.push_back(parse_formula("!" + a));
    fs.push_back(parse_formula("!" + a + " | " + b));
  }
  return FlatKB(std::move(fs));
}

StratifiedKB random_layers(int size, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> atom(0, 5), sign(0, 1), width(1, 3);
  std::vector<std::vector<Formula>> layers(4);
  std::vector<std::string> seen;
  while (static_cast<int>(seen.size()) < size) {
    std::string clause;
    for (int k = width(rng); k > 0; --k) {
      clause += (clause.empty() ? "" : " | ") + std::string(sign(rng) ? "!" : "") + "Q" + std::to_string(atom(rng));
    }
    const Formula f = parse_formula(clause);
    if (std::find(seen.begin(), seen.end(), f.to_string()) != seen.end()) continue;
    seen.push_back(f.to_string());
    layers[seen.size() % layers.size()].push_back(f);
  }
  return StratifiedKB::with_default_weights(layers);
}

void BM_MaximalConsistentSubsets(benchmark::State& state) {
  const FlatKB kb = conflict_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_consistent_subsets(kb));
  state.counters["formulas"] = static_cast<double>(kb.size());
}
BENCHMARK(BM_MaximalConsistentSubsets)->DenseRange(2, 5);

void BM_ArgumentativeQuery(benchmark::State& state) {
  const int conflicts = static_cast<int>(state.range(0));
  const FlatKB kb = conflict_chain(conflicts);
  const Formula goal = parse_formula("P" + std::to_string(conflicts));
  for (auto _ : state) benchmark::DoNotOptimize(holds(kb, goal, FlatRelation::kArgumentative));
}
BENCHMARK(BM_ArgumentativeQuery)->DenseRange(2, 5);

void BM_Saturation(benchmark::State& state) {
  const StratifiedKB kb = random_layers(static_cast<int>(state.range(0)), 7);
  const ParaBase base = biweight_base(kb);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(base));
  state.counters["clauses"] = static_cast<double>(saturate(base).size());
}
BENCHMARK(BM_Saturation)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
