#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graver/orbit_store.hpp"
#include "graver/pair_queue.hpp"
#include "graver/pottier.hpp"
#include "graver/symmetry.hpp"

namespace graver {

/// Pottier's completion storing only orbit representatives.
///
/// G^sym starts as rep(F ∪ -F); the pair set holds canonical forms only.
/// Normal forms are taken against the materialized expansion orb(G^sym).
/// The group must leave the lattice generated by F invariant.
template <Scalar T>
SymmetricResult<T> sym_pottier(std::span<const IntVector<T>> F,
                               const PermutationGroup& group,
                               const EngineOptions& options = {},
                               EngineTrace<T>* trace = nullptr) {
  const std::size_t n = group.degree();
  const Canonicalizer<T> canon(group, 0, options.orbit_cap);
  detail::OrbitStore<T> store(n, canon);
  FifoPairQueue<T> C;

  auto add_rep = [&](const IntVector<T>& f) {
    if (f.is_zero() || !store.add(canon.canonical(f))) return;
    for (std::size_t i = 0; i < store.representatives().size(); ++i) {
      auto sums = store.pair_sums(i);
      std::vector<IntVector<T>> keys(sums.size());
      detail::parallel_for(sums.size(), options.threads, [&](std::size_t k) {
        if (!sums[k].is_zero()) keys[k] = canon.canonical(sums[k]);
      });
      for (auto& key : keys)
        if (!key.empty()) C.push(std::move(key));
    }
  };

  for (const auto& f : F) {
    if (f.size() != n) throw DimensionError("sym_pottier: wrong length");
    add_rep(f);
    add_rep(-f);
  }

  while (!C.empty()) {
    IntVector<T> f = normal_form(C.pop(), store.expanded());
    if (trace) ++trace->reductions;
    if (!f.is_zero()) {
      if (trace) trace->added.push_back(canon.canonical(f));
      add_rep(f);
    }
  }
  if (trace) trace->pairs_enqueued = C.total_enqueued();
  return {store.expanded(), store.representatives()};
}

}  // namespace graver
