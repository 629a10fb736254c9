#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "argkb/formula.hpp"
#include "argkb/weight.hpp"

namespace argkb {

/// Sorted, duplicate-free set of formula indices into a knowledge base.
class SubsetRef {
 public:
  SubsetRef() = default;
  /// Sorts and deduplicates.
  explicit SubsetRef(std::vector<std::size_t> indices);
  SubsetRef(std::initializer_list<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;
  bool is_subset_of(const SubsetRef& other) const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::string to_string() const;  // "{0,2,3}"

  // Lexicographic on the sorted index sequence.
  friend bool operator==(const SubsetRef&, const SubsetRef&) = default;
  friend auto operator<=>(const SubsetRef&, const SubsetRef&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Minimal consistent support for a conclusion. The weight is absent for
/// flat knowledge bases and equals the least layer weight among the support
/// for stratified ones.
struct Argument {
  SubsetRef support;
  Formula conclusion;
  std::optional<Weight> weight;
};

/// A flat knowledge base: a set of formulas addressed by position.
class FlatKB {
 public:
  FlatKB() = default;
  /// Throws InvalidKnowledgeBase if two entries are structurally identical.
  explicit FlatKB(std::vector<Formula> formulas);

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  const Formula& operator[](std::size_t index) const { return formulas_.at(index); }
  const std::vector<Formula>& formulas() const { return formulas_; }
  std::vector<std::string> vocabulary() const;

  SubsetRef all() const;
  std::vector<Formula> select(const SubsetRef& subset) const;

 private:
  std::vector<Formula> formulas_;
};

/// How the first layer weight of a StratifiedKB is validated.
enum class TopWeight {
  kMustBeOne,   // knowledge bases proper: alpha_1 = 1
  kAnyPositive  // merge sources, whose reliability may sit below 1
};

/// Layered knowledge base B_1 u ... u B_n with strictly decreasing weights.
/// Formulas are indexed globally in layer order.
class StratifiedKB {
 public:
  struct Layer {
    Weight weight;
    std::vector<Formula> formulas;
  };

  StratifiedKB() = default;
  /// Throws InvalidKnowledgeBase unless weights are strictly decreasing and
  /// positive, the first weight satisfies `top`, and no formula repeats
  /// across or within layers.
  explicit StratifiedKB(std::vector<Layer> layers, TopWeight top = TopWeight::kMustBeOne);

  /// Assigns alpha_i = 1 - (i-1)/n to n layers given in priority order.
  static StratifiedKB with_default_weights(std::vector<std::vector<Formula>> layers);
  /// One layer of weight 1.
  static StratifiedKB single_layer(const FlatKB& kb);

  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }
  std::size_t size() const { return flat_.size(); }

  /// All formulas in global index order.
  const FlatKB& flat() const { return flat_; }
  std::size_t layer_of(std::size_t index) const { return layer_of_.at(index); }
  Weight weight_of(std::size_t index) const { return layers_[layer_of(index)].weight; }
  /// Global indices of layers [0, count).
  SubsetRef prefix(std::size_t count) const;
  std::vector<std::string> vocabulary() const { return flat_.vocabulary(); }

 private:
  std::vector<Layer> layers_;
  FlatKB flat_;
  std::vector<std::size_t> layer_of_;
};

}  // namespace argkb
