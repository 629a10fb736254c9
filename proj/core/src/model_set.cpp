#include "model_set.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "argkb/errors.hpp"

namespace argkb::detail {

ModelSet::ModelSet(std::size_t atom_count, bool filled)
    : rows_(std::size_t{1} << atom_count), words_((rows_ + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
  trim();
}

void ModelSet::trim() {
  if (rows_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (rows_ % 64)) - 1;
}

bool ModelSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ModelSet::subset_of(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t ModelSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint64_t> ModelSet::members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < rows_; ++r) {
    if (test(r)) out.push_back(r);
  }
  return out;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ModelSet ModelSet::complement() const {
  ModelSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool operator<(const ModelSet& a, const ModelSet& b) { return a.members() < b.members(); }

namespace {

ModelSet eval(const Formula& f, const std::vector<std::string>& vocabulary) {
  using K = Formula::Kind;
  const std::size_t n = vocabulary.size();
  switch (f.kind()) {
    case K::kTrue:
      return ModelSet(n, true);
    case K::kFalse:
      return ModelSet(n, false);
    case K::kAtom: {
      auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(), f.name());
      if (it == vocabulary.end() || *it != f.name()) {
        throw PreconditionError("atom '" + f.name() + "' outside the vocabulary");
      }
      const auto shift = n - 1 - static_cast<std::size_t>(it - vocabulary.begin());
      ModelSet out(n, false);
      for (std::uint64_t r = 0; r < out.rows(); ++r) {
        if (((r >> shift) & 1U) != 0) out.set(r);
      }
      return out;
    }
    case K::kNot:
      return eval(f.operand(), vocabulary).complement();
    case K::kAnd: {
      ModelSet out = eval(f.lhs(), vocabulary);
      out &= eval(f.rhs(), vocabulary);
      return out;
    }
    case K::kOr: {
      ModelSet out = eval(f.lhs(), vocabulary);
      out |= eval(f.rhs(), vocabulary);
      return out;
    }
    case K::kImplies: {
      ModelSet out = eval(f.lhs(), vocabulary).complement();
      out |= eval(f.rhs(), vocabulary);
      return out;
    }
    case K::kIff: {
      const ModelSet a = eval(f.lhs(), vocabulary);
      const ModelSet b = eval(f.rhs(), vocabulary);
      ModelSet both = a;
      both &= b;
      ModelSet neither = a.complement();
      neither &= b.complement();
      both |= neither;
      return both;
    }
  }
  return ModelSet(n, false);
}

// A cube fixes the atoms in `care` to the bits in `value`.
struct Cube {
  std::uint64_t value;
  std::uint64_t care;
  auto operator<=>(const Cube&) const = default;
  bool covers(std::uint64_t row) const { return (row & care) == value; }
};

std::vector<Cube> prime_implicants(const std::vector<std::uint64_t>& minterms, std::size_t n) {
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::set<Cube> current;
  for (auto m : minterms) current.insert({m, all});
  std::set<Cube> primes;
  while (!current.empty()) {
    std::set<Cube> next;
    std::set<Cube> merged;
    for (auto it = current.begin(); it != current.end(); ++it) {
      for (auto jt = std::next(it); jt != current.end(); ++jt) {
        if (it->care != jt->care) continue;
        const std::uint64_t diff = it->value ^ jt->value;
        if (std::popcount(diff) != 1) continue;
        next.insert({it->value & ~diff, it->care & ~diff});
        merged.insert(*it);
        merged.insert(*jt);
      }
    }
    for (const auto& c : current) {
      if (!merged.contains(c)) primes.insert(c);
    }
    current = std::move(next);
  }
  return {primes.begin(), primes.end()};
}

// Smallest set of primes covering every minterm: essential primes, then an
// exhaustive search by increasing size over the remainder (greedy fallback
// once the remainder gets large).
std::vector<Cube> minimum_cover(const std::vector<Cube>& primes, const std::vector<std::uint64_t>& minterms) {
  std::vector<Cube> chosen;
  std::vector<std::uint64_t> open;
  for (auto m : minterms) {
    std::size_t hits = 0;
    const Cube* only = nullptr;
    for (const auto& p : primes) {
      if (p.covers(m)) {
        ++hits;
        only = &p;
      }
    }
    if (hits == 1 && std::find(chosen.begin(), chosen.end(), *only) == chosen.end()) chosen.push_back(*only);
  }
  auto covered = [](const std::vector<Cube>& cubes, std::uint64_t m) {
    return std::any_of(cubes.begin(), cubes.end(), [&](const Cube& c) { return c.covers(m); });
  };
  for (auto m : minterms) {
    if (!covered(chosen, m)) open.push_back(m);
  }
  if (open.empty()) return chosen;

  std::vector<Cube> rest;
  for (const auto& p : primes) {
    if (std::find(chosen.begin(), chosen.end(), p) == chosen.end() &&
        std::any_of(open.begin(), open.end(), [&](std::uint64_t m) { return p.covers(m); })) {
      rest.push_back(p);
    }
  }

  constexpr std::size_t kExhaustiveLimit = 20;
  if (rest.size() <= kExhaustiveLimit) {
    for (std::size_t k = 1; k <= rest.size(); ++k) {
      std::vector<bool> select(rest.size(), false);
      std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<Cube> trial;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (select[i]) trial.push_back(rest[i]);
        }
        if (std::all_of(open.begin(), open.end(), [&](std::uint64_t m) { return covered(trial, m); })) {
          chosen.insert(chosen.end(), trial.begin(), trial.end());
          return chosen;
        }
      } while (std::prev_permutation(select.begin(), select.end()));
    }
  }
  while (!open.empty()) {
    auto best = std::max_element(rest.begin(), rest.end(), [&](const Cube& a, const Cube& b) {
      return std::count_if(open.begin(), open.end(), [&](std::uint64_t m) { return a.covers(m); }) <
             std::count_if(open.begin(), open.end(), [&](std::uint64_t m) { return b.covers(m); });
    });
    chosen.push_back(*best);
    std::erase_if(open, [&](std::uint64_t m) { return best->covers(m); });
  }
  return chosen;
}

}  // namespace

ModelSet models_of(const Formula& f, const std::vector<std::string>& vocabulary, const Limits& limits) {
  if (vocabulary.size() > limits.max_atoms) throw CapExceeded("max_atoms", limits.max_atoms);
  return eval(f, vocabulary);
}

Formula minimal_dnf(const ModelSet& models, const std::vector<std::string>& vocabulary) {
  if (models.empty()) return Formula::falsity();
  if (models.count() == models.rows()) return Formula::truth();
  const std::size_t n = vocabulary.size();
  const std::vector<std::uint64_t> minterms = models.members();
  std::vector<Cube> cover = minimum_cover(prime_implicants(minterms, n), minterms);

  std::vector<Formula> terms;
  for (const auto& cube : cover) {
    std::vector<Formula> literals;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t b = std::uint64_t{1} << (n - 1 - i);
      if ((cube.care & b) == 0) continue;
      Formula a = Formula::atom(vocabulary[i]);
      literals.push_back((cube.value & b) != 0 ? a : !a);
    }
    terms.push_back(Formula::conjunction_of(literals));
  }
  std::sort(terms.begin(), terms.end(),
            [](const Formula& a, const Formula& b) { return a.to_string() < b.to_string(); });
  return Formula::disjunction_of(terms);
}

}  // namespace argkb::detail
