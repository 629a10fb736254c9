#include "subset_oracle.hpp"

#include <algorithm>

#include "argkb/errors.hpp"

namespace argkb::detail {

Mask to_mask(const SubsetRef& subset) {
  Mask m = 0;
  for (std::size_t i : subset) m |= bit(i);
  return m;
}

std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if ((m & 1U) != 0) out.push_back(i);
  }
  return out;
}

SubsetRef to_ref(Mask m) { return SubsetRef(indices_of(m)); }

bool lex_less(Mask a, Mask b) {
  // Walk both index sequences in ascending order.
  while (a != 0 && b != 0) {
    const int ia = __builtin_ctzll(a);
    const int ib = __builtin_ctzll(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void sort_canonical(std::vector<Mask>& masks) { std::sort(masks.begin(), masks.end(), lex_less); }

SubsetOracle::SubsetOracle(std::span<const Formula> formulas, const Limits& limits)
    : limits_(limits), vocabulary_(vocabulary_of(formulas)) {
  if (formulas.size() > kMaxFormulas) throw CapExceeded("formulas per knowledge base", kMaxFormulas);
  if (vocabulary_.size() > limits_.max_atoms) throw CapExceeded("max_atoms", limits_.max_atoms);
  fragments_.reserve(formulas.size());
  for (const auto& f : formulas) fragments_.push_back(encode(f, pool_));
}

void SubsetOracle::charge() {
  if (++checks_ > limits_.max_subset_checks) {
    throw CapExceeded("max_subset_checks", limits_.max_subset_checks);
  }
}

bool SubsetOracle::run(Mask subset, const Fragment* extra) {
  charge();
  std::vector<const Fragment*> selected;
  for (std::size_t i : indices_of(subset)) selected.push_back(&fragments_[i]);
  if (extra != nullptr) selected.push_back(extra);
  return solve(selected, pool_.var_count());
}

bool SubsetOracle::consistent(Mask subset) {
  if (auto it = consistent_memo_.find(subset); it != consistent_memo_.end()) return it->second;
  const bool result = run(subset, nullptr);
  consistent_memo_.emplace(subset, result);
  return result;
}

SubsetOracle::GoalEntry& SubsetOracle::goal_entry(const Formula& goal) {
  auto it = goals_.find(goal);
  if (it != goals_.end()) return it->second;
  std::vector<std::string> merged = vocabulary_;
  for (auto& atom : goal.vocabulary()) merged.push_back(std::move(atom));
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged.size() > limits_.max_atoms) throw CapExceeded("max_atoms", limits_.max_atoms);
  return goals_.emplace(goal, GoalEntry{encode(goal, pool_, true), {}}).first->second;
}

bool SubsetOracle::entails(Mask subset, const Formula& goal) {
  GoalEntry& entry = goal_entry(goal);
  if (auto it = entry.memo.find(subset); it != entry.memo.end()) return it->second;
  const bool result = !run(subset, &entry.negated);
  entry.memo.emplace(subset, result);
  return result;
}

const std::vector<Mask>& SubsetOracle::maximal_extensions(Mask base, Mask candidates) {
  const auto key = std::make_pair(base, candidates);
  if (auto it = extensions_memo_.find(key); it != extensions_memo_.end()) return it->second;

  const std::vector<std::size_t> order = indices_of(candidates);
  // rest[p]: candidates strictly after position p.
  std::vector<Mask> rest(order.size() + 1, 0);
  for (std::size_t p = order.size(); p-- > 0;) rest[p] = rest[p + 1] | bit(order[p]);

  std::vector<Mask> found;
  auto dfs = [&](auto&& self, std::size_t pos, Mask current) -> void {
    if (pos == order.size()) {
      for (std::size_t i : order) {
        if (!has(current, i) && consistent(base | current | bit(i))) return;
      }
      found.push_back(current);
      return;
    }
    const Mask b = bit(order[pos]);
    if (consistent(base | current | b)) self(self, pos + 1, current | b);
    // Leaving b out can only end maximal if some later choice blocks it.
    if (!consistent(base | current | b | rest[pos + 1])) self(self, pos + 1, current);
  };
  dfs(dfs, 0, 0);
  sort_canonical(found);
  return extensions_memo_.emplace(key, std::move(found)).first->second;
}

std::vector<Mask> SubsetOracle::minimal_inconsistent(Mask universe) {
  const std::vector<std::size_t> order = indices_of(universe);
  std::vector<Mask> found;
  // Extends consistent sets only; every minimal inconsistent set minus its
  // largest index is consistent, so each one is reached exactly once.
  auto dfs = [&](auto&& self, std::size_t pos, Mask current) -> void {
    for (std::size_t p = pos; p < order.size(); ++p) {
      const Mask next = current | bit(order[p]);
      if (consistent(next)) {
        self(self, p + 1, next);
        continue;
      }
      bool minimal = true;
      for (std::size_t i : indices_of(next)) {
        if (!consistent(next & ~bit(i))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(next);
    }
  };
  dfs(dfs, 0, 0);
  sort_canonical(found);
  return found;
}

namespace {

// Calls visit(mask) for every k-subset of `order` in lexicographic order;
// stops early when visit returns true.
template <typename Visit>
bool for_each_combination(const std::vector<std::size_t>& order, std::size_t k, Visit&& visit) {
  const std::size_t n = order.size();
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (std::size_t i : pick) m |= bit(order[i]);
    if (visit(m)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<Mask> SubsetOracle::entailing_hosts(Mask universe, const Formula& goal) {
  std::vector<Mask> hosts;
  for (Mask mc : maximal_extensions(0, universe)) {
    if (entails(mc, goal)) hosts.push_back(mc);
  }
  return hosts;
}

bool SubsetOracle::has_support(Mask universe, const Formula& goal) {
  for (Mask mc : maximal_extensions(0, universe)) {
    if (entails(mc, goal)) return true;
  }
  return false;
}

std::optional<Mask> SubsetOracle::min_support(Mask universe, const Formula& goal) {
  // Every support lies inside some maximal consistent subset that entails goal.
  const std::vector<Mask> hosts = entailing_hosts(universe, goal);
  if (hosts.empty()) return std::nullopt;
  const std::vector<std::size_t> order = indices_of(universe);
  std::optional<Mask> result;
  for (std::size_t k = 0; k <= order.size() && !result; ++k) {
    for_each_combination(order, k, [&](Mask m) {
      const bool hosted = std::any_of(hosts.begin(), hosts.end(), [&](Mask h) { return (m & ~h) == 0; });
      if (hosted && entails(m, goal)) {
        result = m;
        return true;
      }
      return false;
    });
  }
  return result;
}

std::vector<Mask> SubsetOracle::all_supports(Mask universe, const Formula& goal) {
  std::vector<Mask> found;
  const std::vector<Mask> hosts = entailing_hosts(universe, goal);
  if (hosts.empty()) return found;
  const std::vector<std::size_t> order = indices_of(universe);
  for (std::size_t k = 0; k <= order.size(); ++k) {
    for_each_combination(order, k, [&](Mask m) {
      const bool hosted = std::any_of(hosts.begin(), hosts.end(), [&](Mask h) { return (m & ~h) == 0; });
      if (!hosted) return false;
      const bool covers_found = std::any_of(found.begin(), found.end(), [&](Mask s) { return (s & ~m) == 0; });
      if (covers_found) return false;
      if (entails(m, goal)) found.push_back(m);
      return false;
    });
  }
  return found;
}

}  // namespace argkb::detail
