#include "argkb/knowledge_base.hpp"

#include <algorithm>
#include <set>

#include "argkb/errors.hpp"

namespace argkb {

SubsetRef::SubsetRef(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

SubsetRef::SubsetRef(std::initializer_list<std::size_t> indices)
    : SubsetRef(std::vector<std::size_t>(indices)) {}

bool SubsetRef::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool SubsetRef::is_subset_of(const SubsetRef& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

std::string SubsetRef::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out + "}";
}

FlatKB::FlatKB(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {
  std::set<Formula> seen;
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    if (!seen.insert(formulas_[i]).second) {
      throw InvalidKnowledgeBase("duplicate formula at index " + std::to_string(i) + ": " +
                                 formulas_[i].to_string());
    }
  }
}

std::vector<std::string> FlatKB::vocabulary() const { return vocabulary_of(formulas_); }

SubsetRef FlatKB::all() const {
  std::vector<std::size_t> indices(formulas_.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  return SubsetRef(std::move(indices));
}

std::vector<Formula> FlatKB::select(const SubsetRef& subset) const {
  std::vector<Formula> out;
  out.reserve(subset.size());
  for (std::size_t i : subset) out.push_back(formulas_.at(i));
  return out;
}

StratifiedKB::StratifiedKB(std::vector<Layer> layers, TopWeight top) : layers_(std::move(layers)) {
  std::vector<Formula> all;
  std::set<Formula> seen;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const Weight w = layers_[i].weight;
    if (i == 0 && top == TopWeight::kMustBeOne && w != Weight::one()) {
      throw InvalidKnowledgeBase("first layer weight must be 1, got " + w.to_string());
    }
    if (w.is_zero()) throw InvalidKnowledgeBase("layer " + std::to_string(i + 1) + " has weight 0");
    if (i > 0 && !(w < layers_[i - 1].weight)) {
      throw InvalidKnowledgeBase("layer weights must strictly decrease: layer " +
                                 std::to_string(i + 1) + " has " + w.to_string() + " after " +
                                 layers_[i - 1].weight.to_string());
    }
    for (const auto& f : layers_[i].formulas) {
      if (!seen.insert(f).second) {
        throw InvalidKnowledgeBase("formula repeated in layer " + std::to_string(i + 1) + ": " +
                                   f.to_string());
      }
      all.push_back(f);
      layer_of_.push_back(i);
    }
  }
  flat_ = FlatKB(std::move(all));
}

StratifiedKB StratifiedKB::with_default_weights(std::vector<std::vector<Formula>> layers) {
  const auto n = static_cast<std::int64_t>(layers.size());
  std::vector<Layer> weighted;
  weighted.reserve(layers.size());
  for (std::int64_t i = 0; i < n; ++i) {
    weighted.push_back({Weight::from_ratio(n - i, n), std::move(layers[static_cast<std::size_t>(i)])});
  }
  return StratifiedKB(std::move(weighted));
}

StratifiedKB StratifiedKB::single_layer(const FlatKB& kb) {
  if (kb.empty()) return StratifiedKB{};
  return StratifiedKB({Layer{Weight::one(), kb.formulas()}});
}

SubsetRef StratifiedKB::prefix(std::size_t count) const {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < layer_of_.size() && layer_of_[i] < count; ++i) indices.push_back(i);
  return SubsetRef(std::move(indices));
}

}  // namespace argkb
