#include "argkb/sat.hpp"

#include <algorithm>

#include "argkb/errors.hpp"
#include "cnf.hpp"

namespace argkb {

namespace {

void check_atoms(std::size_t count, const Limits& limits) {
  if (count > limits.max_atoms) throw CapExceeded("max_atoms", limits.max_atoms);
}

bool solve_all(std::span<const Formula> formulas, const Formula* negated_goal, const Limits& limits) {
  std::vector<Formula> all(formulas.begin(), formulas.end());
  if (negated_goal != nullptr) all.push_back(*negated_goal);
  check_atoms(vocabulary_of(all).size(), limits);

  detail::VarPool pool;
  std::vector<detail::Fragment> fragments;
  fragments.reserve(formulas.size() + 1);
  for (const auto& f : formulas) fragments.push_back(detail::encode(f, pool));
  if (negated_goal != nullptr) fragments.push_back(detail::encode(*negated_goal, pool, true));

  std::vector<const detail::Fragment*> refs;
  for (const auto& f : fragments) refs.push_back(&f);
  return detail::solve(refs, pool.var_count());
}

}  // namespace

bool is_satisfiable(std::span<const Formula> formulas, const Limits& limits) {
  return solve_all(formulas, nullptr, limits);
}

bool entails(std::span<const Formula> formulas, const Formula& goal, const Limits& limits) {
  return !solve_all(formulas, &goal, limits);
}

std::vector<Interpretation> enumerate_models(std::span<const Formula> formulas,
                                             std::vector<std::string> vocabulary,
                                             const Limits& limits) {
  std::sort(vocabulary.begin(), vocabulary.end());
  vocabulary.erase(std::unique(vocabulary.begin(), vocabulary.end()), vocabulary.end());
  for (const auto& atom : vocabulary_of(formulas)) {
    if (!std::binary_search(vocabulary.begin(), vocabulary.end(), atom)) {
      throw PreconditionError("enumerate_models: vocabulary is missing atom '" + atom + "'");
    }
  }
  check_atoms(vocabulary.size(), limits);

  const std::size_t n = vocabulary.size();
  std::vector<Interpretation> models;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
    std::vector<bool> values(n);
    // First atom is the most significant bit: it varies slowest.
    for (std::size_t i = 0; i < n; ++i) values[i] = ((row >> (n - 1 - i)) & 1U) != 0;
    Interpretation candidate(vocabulary, std::move(values));
    const bool ok = std::all_of(formulas.begin(), formulas.end(),
                                [&](const Formula& f) { return f.evaluate(candidate); });
    if (ok) models.push_back(std::move(candidate));
  }
  return models;
}

}  // namespace argkb
