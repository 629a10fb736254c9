#include "argkb/subsets.hpp"

#include <string>

#include "argkb/errors.hpp"
#include "subset_oracle.hpp"

namespace argkb {

using detail::Mask;
using detail::SubsetOracle;

namespace {

std::vector<SubsetRef> to_refs(const std::vector<Mask>& masks) {
  std::vector<SubsetRef> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(detail::to_ref(m));
  return out;
}

Mask union_of(const std::vector<Mask>& masks) {
  Mask u = 0;
  for (Mask m : masks) u |= m;
  return u;
}

}  // namespace

std::vector<SubsetRef> maximal_consistent_subsets(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  return to_refs(oracle.maximal_consistent(oracle.full()));
}

std::vector<SubsetRef> minimal_inconsistent_subsets(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  return to_refs(oracle.minimal_inconsistent(oracle.full()));
}

SubsetRef inc_set(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  return detail::to_ref(union_of(oracle.minimal_inconsistent(oracle.full())));
}

SubsetRef free_base(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  return detail::to_ref(oracle.full() & ~union_of(oracle.minimal_inconsistent(oracle.full())));
}

SubsetRef free_base_by_intersection(const FlatKB& kb, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  Mask meet = oracle.full();
  for (Mask mc : oracle.maximal_consistent(oracle.full())) meet &= mc;
  return detail::to_ref(meet);
}

std::optional<Argument> find_argument(const FlatKB& kb, const Formula& goal, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  auto support = oracle.min_support(oracle.full(), goal);
  if (!support) return std::nullopt;
  return Argument{detail::to_ref(*support), goal, std::nullopt};
}

std::vector<Argument> enumerate_arguments(const FlatKB& kb, const Formula& goal, const Limits& limits) {
  SubsetOracle oracle(kb.formulas(), limits);
  std::vector<Argument> out;
  for (Mask m : oracle.all_supports(oracle.full(), goal)) {
    out.push_back(Argument{detail::to_ref(m), goal, std::nullopt});
  }
  return out;
}

bool is_consistent(const FlatKB& kb, const SubsetRef& subset, const Limits& limits) {
  for (std::size_t i : subset) {
    if (i >= kb.size()) throw PreconditionError("subset index " + std::to_string(i) + " out of range");
  }
  SubsetOracle oracle(kb.formulas(), limits);
  return oracle.consistent(detail::to_mask(subset));
}

}  // namespace argkb
