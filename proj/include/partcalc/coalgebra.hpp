#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "core_ops.hpp"
#include "enumerate.hpp"
#include "lincomb.hpp"
#include "partition.hpp"

// The coproduct on the span of partial partitions and its iterates.

namespace partcalc {

// One summand L ⊗ R. The unit is the empty tuple on either side.
struct TensorTerm {
  PartitionTuple left;
  PartitionTuple right;
  friend auto operator<=>(const TensorTerm&, const TensorTerm&) = default;
};

// A pure tensor with three or more slots, used when iterating the coproduct.
using TensorChain = std::vector<PartitionTuple>;

// Families F indexing the coproduct sum: nonempty, admissible componentwise,
// every block of F inside a single block of the host, and tuple_quotient(T,F)
// not the unit. The last exclusion keeps the boundary terms out of the sum;
// without it every full-carve family would contribute another copy of
// (something)⊗∅. The block-containment requirement is what makes the
// coproduct coassociative: a family block straddling two host blocks has the
// same restriction tuple as the family of its per-block pieces, and the two
// would double-count on the left-expanded side while the right-expanded side
// sees them once.
inline std::vector<Partition> enumerate_tuple_families(const PartitionTuple& t) {
  std::vector<Partition> out;
  if (t.empty()) return out;
  Partition merged = t.merged();
  for (auto& f : partial_partitions(t.range().atoms())) {
    if (f.empty()) continue;
    if (!is_subpartition(f, merged)) continue;
    if (!admits_to_tuple(t, f)) continue;
    if (tuple_quotient(t, f).empty()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<Partition> enumerate_admissible_families(const Partition& p) {
  return enumerate_tuple_families(PartitionTuple::of(p));
}

inline LinComb<TensorTerm> coproduct_tuple(const PartitionTuple& t) {
  LinComb<TensorTerm> out;
  if (t.empty()) {
    out.add(TensorTerm{}, 1);
    return out;
  }
  out.add(TensorTerm{PartitionTuple{}, t}, 1);
  out.add(TensorTerm{t, PartitionTuple{}}, 1);
  Partition merged = t.merged();
  for (const auto& f : enumerate_tuple_families(t)) {
    std::vector<Partition> parts;
    parts.reserve(f.size());
    for (const auto& jb : f.blocks()) parts.push_back(restriction(merged, jb));
    out.add(TensorTerm{PartitionTuple(std::move(parts)), tuple_quotient(t, f)}, 1);
  }
  return out;
}

inline LinComb<TensorTerm> coproduct(const Partition& p) {
  return coproduct_tuple(PartitionTuple::of(p));
}

// Δ minus the two boundary terms. On the unit the boundary terms coincide and
// are removed once, so the reduced coproduct of ∅ is 0.
inline LinComb<TensorTerm> reduced_coproduct_tuple(const PartitionTuple& t) {
  LinComb<TensorTerm> out = coproduct_tuple(t);
  if (t.empty()) {
    out.add(TensorTerm{}, -1);
    return out;
  }
  out.add(TensorTerm{PartitionTuple{}, t}, -1);
  out.add(TensorTerm{t, PartitionTuple{}}, -1);
  return out;
}

inline LinComb<TensorTerm> reduced_coproduct(const Partition& p) {
  return reduced_coproduct_tuple(PartitionTuple::of(p));
}

// Both sides of (Δ⊗id)Δ = (id⊗Δ)Δ, expanded into three-slot chains.
inline std::pair<LinComb<TensorChain>, LinComb<TensorChain>> coassociativity_sides(
    const Partition& p) {
  LinComb<TensorChain> lhs, rhs;
  LinComb<TensorTerm> outer = coproduct(p);
  for (const auto& [term, c] : outer.terms()) {
    LinComb<TensorTerm> expand_left = coproduct_tuple(term.left);
    for (const auto& [inner, d] : expand_left.terms())
      lhs.add(TensorChain{inner.left, inner.right, term.right}, c * d);
    LinComb<TensorTerm> expand_right = coproduct_tuple(term.right);
    for (const auto& [inner, d] : expand_right.terms())
      rhs.add(TensorChain{term.left, inner.left, inner.right}, c * d);
  }
  return {std::move(lhs), std::move(rhs)};
}

inline bool check_coassociativity(const Partition& p) {
  auto [lhs, rhs] = coassociativity_sides(p);
  return lhs == rhs;
}

// Smallest m with the m-fold reduced coproduct zero, expanding the leftmost
// slot each round. Terminates because each surviving round strictly lowers
// the leftmost slot's atom count: the split-off right part is never empty.
inline std::size_t nilpotency_index(const Partition& p) {
  LinComb<TensorChain> state;
  state.add(TensorChain{PartitionTuple::of(p)}, 1);
  std::size_t m = 0;
  while (!state.is_zero()) {
    ++m;
    LinComb<TensorChain> next;
    for (const auto& [chain, c] : state.terms()) {
      LinComb<TensorTerm> expanded = reduced_coproduct_tuple(chain.front());
      for (const auto& [inner, d] : expanded.terms()) {
        TensorChain grown;
        grown.reserve(chain.size() + 1);
        grown.push_back(inner.left);
        grown.push_back(inner.right);
        grown.insert(grown.end(), chain.begin() + 1, chain.end());
        next.add(std::move(grown), c * d);
      }
    }
    state = std::move(next);
  }
  return m;
}

}  // namespace partcalc
