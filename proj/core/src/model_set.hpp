#pragma once

// Model sets over a fixed vocabulary as bit vectors indexed by truth-table
// row (first atom = most significant bit), and minimal-DNF rendering.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/limits.hpp"

namespace argkb::detail {

class ModelSet {
 public:
  ModelSet() = default;
  ModelSet(std::size_t atom_count, bool filled);

  std::size_t rows() const { return rows_; }
  bool test(std::uint64_t row) const { return ((words_[row / 64] >> (row % 64)) & 1U) != 0; }
  void set(std::uint64_t row) { words_[row / 64] |= std::uint64_t{1} << (row % 64); }

  bool empty() const;
  bool subset_of(const ModelSet& other) const;
  bool intersects(const ModelSet& other) const;
  std::size_t count() const;
  std::vector<std::uint64_t> members() const;

  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet complement() const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;
  /// Orders by the ascending list of member rows.
  friend bool operator<(const ModelSet& a, const ModelSet& b);

 private:
  void trim();

  std::size_t rows_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Models of f over `vocabulary` (sorted, covering f). Throws CapExceeded
/// when the vocabulary exceeds limits.max_atoms.
ModelSet models_of(const Formula& f, const std::vector<std::string>& vocabulary, const Limits& limits);

/// A minimum-size disjunction of prime implicant cubes with exactly the
/// given models: `true` and `false` for the trivial sets.
Formula minimal_dnf(const ModelSet& models, const std::vector<std::string>& vocabulary);

}  // namespace argkb::detail
